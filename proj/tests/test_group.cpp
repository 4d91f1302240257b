#include "doctest.h"

#include <set>

#include "cvt/catalog.hpp"
#include "cvt/cayley.hpp"
#include "cvt/group.hpp"
#include "cvt/perm_group.hpp"
#include "support.hpp"

using namespace cvt;
using testsupport::catalog_group;
using testsupport::perm_group;

TEST_CASE("permutation products apply the left factor first") {
  const auto p = Permutation::from_cycles("(0 1)", 3);
  const auto q = Permutation::from_cycles("(1 2)", 3);
  CHECK((p * q)[0] == 2);
  CHECK((q * p)[0] == 1);
  CHECK((p * p).is_identity());
  CHECK(Permutation::from_cycles("(0 1 2)(3 4)", 5).order() == 6);
  CHECK(Permutation::from_cycles("()", 4).is_identity());
  CHECK(Permutation::from_cycles("(0 2 1)", 3).to_cycles() == "(0 2 1)");
  CHECK_THROWS_AS(Permutation::from_cycles("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 0)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("group_from_generators") {
  auto z4 = perm_group({"(0 1 2 3)"}, 4);
  CHECK(z4.order() == 4);
  CHECK(z4.is_abelian());
  auto s3 = perm_group({"(0 1)", "(0 1 2)"}, 3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.identity() == 0);
  CHECK(s3.generator_marks().size() == 2);
  CHECK(s3.generates(s3.generator_marks()));
  CHECK_THROWS_AS(group_from_generators(std::vector<Permutation>{}), std::invalid_argument);
  CHECK_THROWS_AS(group_from_generators(std::vector<Permutation>{Permutation::from_cycles("(0 1 2 3 4 5 6 7 8)", 9),
                                                                Permutation::from_cycles("(0 1)", 9)},
                                        "S9", 1000),
                  LimitExceeded);
}

TEST_CASE("element numbering is deterministic") {
  auto a = perm_group({"(0 1)", "(0 1 2 3)"}, 4);
  auto b = perm_group({"(0 1)", "(0 1 2 3)"}, 4);
  REQUIRE(a.order() == 24);
  for (int x = 0; x < 24; ++x) {
    CHECK(a.realization(x) == b.realization(x));
  }
}

TEST_CASE("derived subgroup") {
  CHECK(derived_subgroup(catalog_group("small14", "Z6")).size() == 1);
  CHECK(derived_subgroup(perm_group({"(0 1)", "(0 1 2)"}, 3)).size() == 3);
  CHECK(derived_subgroup(catalog_group("small14", "Q8")).size() == 2);
  CHECK(derived_subgroup(catalog_group("small14", "A4")).size() == 4);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(catalog_group("small14", "Z6")).cyclic_orders == std::vector<int>{6});
  CHECK(abelianization(catalog_group("small14", "Z2^3")).cyclic_orders == std::vector<int>{2, 2, 2});
  CHECK(abelianization(perm_group({"(0 1)", "(0 1 2)"}, 3)).cyclic_orders == std::vector<int>{2});
  CHECK(abelianization(catalog_group("small14", "Z2xZ6")).cyclic_orders == std::vector<int>{2, 6});
  CHECK(abelianization(catalog_group("small14", "A4")).cyclic_orders == std::vector<int>{3});
  const auto a5 = perm_group({"(0 1 2 3 4)", "(0 1 2)"}, 5);
  CHECK(abelianization(a5).cyclic_orders.empty());
  CHECK(abelianization(a5).product() == 1);
}

TEST_CASE("cubic Cayley filter") {
  CHECK(cubic_cayley_filter(catalog_group("small14", "Z2^3")));
  CHECK_FALSE(cubic_cayley_filter(catalog_group("small14", "Z3xZ3")));
  CHECK(cubic_cayley_filter(catalog_group("small14", "Q8")));
  CHECK(cubic_cayley_filter(catalog_group("small14", "Z1")));
  CHECK(cubic_cayley_filter(perm_group({"(0 1 2 3 4)", "(0 1 2)"}, 5)));
  CHECK_FALSE(cubic_cayley_filter(catalog_group("two_groups64", "Z2^4")));
  CHECK_FALSE(cubic_cayley_filter(catalog_group("two_groups64", "Z4xZ4")));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(catalog_group("small14", "Z4")).order == 2);
  CHECK(automorphism_group(catalog_group("small14", "Z2xZ2")).order == 6);
  CHECK(automorphism_group(perm_group({"(0 1)", "(0 1 2)"}, 3)).order == 6);
  CHECK(automorphism_group(catalog_group("small14", "Q8")).order == 24);
  CHECK(automorphism_group(catalog_group("small14", "D4")).order == 8);
  CHECK(automorphism_group(catalog_group("small14", "A4")).order == 24);
  CHECK(automorphism_group(catalog_group("small14", "Z2^3")).order == 168);
}

TEST_CASE("automorphisms are homomorphisms on every catalog group up to 64") {
  for (const auto* name : {"small14", "two_groups64"}) {
    for (const auto& e : builtin_catalog(name)) {
      const auto g = build_group(e);
      if (g.order() > 64) continue;
      CAPTURE(e.label);
      for (const auto& phi : automorphism_group(g).generators) {
        for (int a = 0; a < static_cast<int>(g.order()); ++a) {
          for (int b = 0; b < static_cast<int>(g.order()); ++b) {
            REQUIRE(phi[g.mul(a, b)] == g.mul(phi[a], phi[b]));
          }
        }
      }
    }
  }
}

TEST_CASE("catalog groups satisfy the group axioms") {
  for (const auto* name : {"small14", "two_groups64", "families64"}) {
    for (const auto& e : builtin_catalog(name)) {
      const auto g = build_group(e);
      CAPTURE(e.label);
      CHECK(g.order() == e.declared_order);
      CHECK(g.check_associativity());
      CHECK(g.check_inverses());
      CHECK(g.generates(g.generator_marks()));
    }
  }
}

TEST_CASE("small14 lists every group of order at most 14 once") {
  // Number of isomorphism classes of groups of order 1..14.
  const std::vector<int> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2};
  std::vector<FiniteGroup> groups;
  for (const auto& e : builtin_catalog("small14")) groups.push_back(build_group(e));
  for (int n = 1; n <= 14; ++n) {
    std::vector<const FiniteGroup*> of_order;
    for (const auto& g : groups) {
      if (static_cast<int>(g.order()) == n) of_order.push_back(&g);
    }
    CAPTURE(n);
    CHECK(static_cast<int>(of_order.size()) == expected[n - 1]);
    for (std::size_t i = 0; i < of_order.size(); ++i) {
      for (std::size_t j = i + 1; j < of_order.size(); ++j) CHECK_FALSE(groups_isomorphic(*of_order[i], *of_order[j]));
    }
  }
}

TEST_CASE("r class membership") {
  CHECK(r_class_member(catalog_group("small14", "Z2xZ2")));
  CHECK(r_class_member(catalog_group("small14", "Z8")));
  CHECK_FALSE(r_class_member(catalog_group("small14", "Z3")));
  CHECK(r_class_member(catalog_group("small14", "D4")));
  CHECK(r_class_member(catalog_group("small14", "Z2^3")));
  CHECK_FALSE(r_class_member(catalog_group("two_groups64", "Z2^4")));
  CHECK_FALSE(r_class_member(catalog_group("two_groups64", "Z4xZ4")));
}

TEST_CASE("central quotients of order 2") {
  auto z4 = central_quotients_by_order2(catalog_group("small14", "Z4"));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0].order() == 2);
  auto q8 = central_quotients_by_order2(catalog_group("small14", "Q8"));
  REQUIRE(q8.size() == 1);
  CHECK(groups_isomorphic(q8[0], catalog_group("small14", "Z2xZ2")));
  CHECK(central_quotients_by_order2(perm_group({"(0 1)", "(0 1 2)"}, 3)).empty());
  CHECK(central_quotients_by_order2(catalog_group("small14", "Z2^3")).size() == 7);
}

TEST_CASE("r class is closed under central quotients of order 2") {
  for (const auto& e : builtin_catalog("two_groups64")) {
    const auto g = build_group(e);
    if (!r_class_member(g)) continue;
    CAPTURE(e.label);
    for (const auto& q : central_quotients_by_order2(g)) CHECK(r_class_member(q));
  }
}

TEST_CASE("catalog text format round trip and errors") {
  const std::string text =
      "# comment\n"
      "group S3 degree 3 order 6\n"
      "(0 1)\n"
      "(0 1 2)\n"
      "\n"
      "group trivial degree 2 order 1\n"
      "()\n";
  const auto entries = parse_catalog(text);
  REQUIRE(entries.size() == 2);
  CHECK(build_group(entries[0]).order() == 6);
  CHECK(build_group(entries[1]).order() == 1);
  CHECK(parse_catalog(write_catalog(entries)).size() == 2);
  CHECK_THROWS_AS(parse_catalog("group X degree 3 order 3\n(0 1\n"), ParseError);
  try {
    parse_catalog("group X degree 3 order 3\n(0 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  auto bad = parse_catalog("group X degree 3 order 5\n(0 1 2)\n");
  CHECK_THROWS(build_group(bad[0]));
  CHECK(parse_catalog("").empty());
}

TEST_CASE("quotient groups and invariants") {
  const auto d6 = catalog_group("small14", "D6");
  const auto q = quotient_group(d6, derived_subgroup(d6));
  CHECK(q.order() == 4);
  CHECK(abelian_invariants(q).cyclic_orders == std::vector<int>{2, 2});
  CHECK_THROWS_AS(abelian_invariants(d6), std::invalid_argument);
}

#include "doctest.h"

#include "cvt/canonical.hpp"
#include "cvt/cayley.hpp"
#include "cvt/enumerate.hpp"
#include "cvt/perm_group.hpp"
#include "cvt/transitivity.hpp"
#include "support.hpp"

using namespace cvt;
namespace nm = cvt::named;

namespace {

std::vector<Permutation> perms(const std::vector<std::string>& cycles, std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& c : cycles) out.push_back(Permutation::from_cycles(c, n));
  return out;
}

std::vector<Permutation> aut(const Graph& g) { return graph_automorphisms(g).generators; }

Graph prism() { return ladder(3, LadderKind::Circular); }

}  // namespace

TEST_CASE("vertex transitivity") {
  CHECK(is_vertex_transitive(nm::complete(4), aut(nm::complete(4))));
  CHECK_FALSE(is_vertex_transitive(nm::path(3), aut(nm::path(3))));
  CHECK(is_vertex_transitive(nm::petersen(), aut(nm::petersen())));
  const auto bad = perms({"(0 1)"}, 4);
  CHECK_THROWS_WITH_AS(is_vertex_transitive(nm::cycle(4), bad), "not an automorphism", std::invalid_argument);
}

TEST_CASE("arc orbit count m") {
  CHECK(arc_orbit_count(nm::complete(4), aut(nm::complete(4))) == 1);
  CHECK(arc_orbit_count(prism(), aut(prism())) == 2);
  CHECK(arc_orbit_count(nm::complete(4), perms({"(0 1 2 3)"}, 4)) == 3);
  CHECK(arc_orbit_count(nm::petersen(), aut(nm::petersen())) == 1);
  CHECK_THROWS_AS(arc_orbit_count(nm::cycle(5), aut(nm::cycle(5))), std::invalid_argument);
  CHECK_THROWS_AS(arc_orbit_count(nm::complete(4), perms({"(0 1)(2 3)"}, 4)), std::invalid_argument);
}

TEST_CASE("local action") {
  const auto t = truncation(nm::complete(4));
  for (int v = 0; v < 12; ++v) CHECK(local_action(t, aut(t), v).type == LocalType::Z2Fix1);

  const auto f20 = perms({"(0 1 2 3 4)", "(1 2 4 3)"}, 5);
  for (int v = 0; v < 5; ++v) CHECK(local_action(nm::complete(5), f20, v).type == LocalType::Z4);

  const auto oct = nm::complete_multipartite(3, 2);
  const auto la = local_action(oct, aut(oct), 0);
  CHECK(la.type == LocalType::D4);
  CHECK(la.stabilizer_order == 8);
  for (const auto& s : la.stabilizer_generators) CHECK(s[0] == 0);

  const auto k4 = nm::complete(4);
  CHECK(local_action(k4, aut(k4), 0).type == LocalType::S3);
  CHECK(local_action(k4, perms({"(0 1 2 3)"}, 4), 0).type == LocalType::Trivial);
  CHECK(local_action(k4, perms({"(0 1)(2 3)", "(0 2)(1 3)", "(1 2 3)"}, 4), 0).type == LocalType::Z3);
  // (V4 x V4) : Z2 on K4,4; the stabiliser is one V4 acting regularly on the other side.
  const auto k44 = nm::complete_bipartite(4, 4);
  const auto v4v4 = perms({"(0 1)(2 3)", "(0 2)(1 3)", "(4 5)(6 7)", "(4 6)(5 7)", "(0 4)(1 5)(2 6)(3 7)"}, 8);
  CHECK(local_action(k44, v4v4, 0).type == LocalType::Z2xZ2);
  const auto k5 = nm::complete(5);
  CHECK(local_action(k5, aut(k5), 0).type == LocalType::Other);
  CHECK_THROWS_AS(local_action(nm::cycle(5), aut(nm::cycle(5)), 0), std::invalid_argument);
}

TEST_CASE("regular subgroup search") {
  const auto k4 = regular_subgroup_search(nm::complete(4));
  CHECK(k4.vertex_transitive);
  CHECK(k4.regular_subgroup.has_value());
  CHECK(k4.dihedral);  // Z2 x Z2 counts as dihedral

  const auto p = regular_subgroup_search(nm::petersen());
  CHECK(p.vertex_transitive);
  CHECK_FALSE(p.regular_subgroup.has_value());

  const auto c6 = regular_subgroup_search(nm::cycle(6));
  REQUIRE(c6.regular_subgroup.has_value());
  CHECK(c6.dihedral);

  CHECK_FALSE(regular_subgroup_search(nm::path(3)).vertex_transitive);
  CHECK_FALSE(regular_subgroup_search(nm::coxeter()).regular_subgroup.has_value());
  CHECK_FALSE(regular_subgroup_search(nm::cube(3), perms({"(0 1)(2 3)(4 5)(6 7)"}, 8)).vertex_transitive);
}

TEST_CASE("found regular subgroups are regular") {
  for (const auto& g : {nm::complete(4), nm::cube(3), ladder(5, LadderKind::Moebius), truncation(nm::complete(4))}) {
    const auto r = regular_subgroup_search(g);
    REQUIRE(r.regular_subgroup.has_value());
    const PermGroup h(g.order(), *r.regular_subgroup);
    CHECK(h.order() == g.order());
    CHECK(h.is_transitive());
    for (const auto& s : *r.regular_subgroup) CHECK(g.is_automorphism(s));
  }
}

TEST_CASE("dihedral recognition") {
  const auto elements = [](const std::vector<std::string>& gens, std::size_t n) {
    return PermGroup(n, perms(gens, n)).elements();
  };
  CHECK(is_dihedral_group(elements({"(0 1 2 3 4 5)"}, 6)) == false);
  CHECK(is_dihedral_group(elements({"(0 1 2)(3 4 5)", "(0 3)(1 5)(2 4)"}, 6)));
  CHECK(is_dihedral_group(elements({"(0 1)(2 3)", "(0 2)(1 3)"}, 4)));
  CHECK_FALSE(is_dihedral_group(elements({"(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"}, 8)));  // Q8
}

TEST_CASE("classification") {
  const auto k4 = classify(nm::complete(4));
  CHECK(k4.m_full == 1);
  CHECK(k4.is_cayley);
  CHECK_FALSE(k4.is_grr);
  CHECK(k4.girth == 3);
  CHECK(k4.diameter == 1);
  CHECK(k4.hamiltonian);
  CHECK(k4.order == 4);
  CHECK(k4.aut_order == 24);

  const auto p = classify(nm::petersen());
  CHECK(p.m_full == 1);
  CHECK_FALSE(p.is_cayley);
  CHECK_FALSE(p.hamiltonian);
  CHECK_FALSE(p.is_dihedrant);

  const auto pr = classify(prism());
  CHECK(pr.m_full == 2);
  CHECK(pr.is_cayley);
  CHECK(pr.is_dihedrant);
  CHECK(pr.girth == 3);

  const auto cox = classify(nm::coxeter());
  CHECK_FALSE(cox.is_cayley);
  CHECK_FALSE(cox.hamiltonian);
  CHECK(cox.girth == 7);
}

TEST_CASE("graphical regular representations") {
  // Every Cayley graph with m = 3 under its full automorphism group.
  int grrs = 0;
  for (const auto& e : builtin_catalog("families64")) {
    const auto g = build_group(e);
    if (g.order() > 32 || g.order() < 4) continue;
    for (const auto& c : cayley_graphs_for_group(g)) {
      const auto r = classify(c.graph);
      if (!r.is_grr) continue;
      ++grrs;
      CAPTURE(e.label);
      CHECK(r.m_full == 3);
      CHECK(r.is_cayley);
      CHECK(r.aut_order == g.order());
      const auto reg = regular_subgroup_search(c.graph);
      REQUIRE(reg.regular_subgroup.has_value());
      CHECK(PermGroup(g.order(), *reg.regular_subgroup).order() == graph_automorphisms(c.graph).order);
    }
  }
  CHECK(grrs > 0);
}

TEST_CASE("classification invariants on the small vertex-transitive graphs") {
  for (int n = 4; n <= 12; n += 2) {
    for (const auto& g : all_connected_cubic_graphs(n, 2)) {
      const auto a = graph_automorphisms(g);
      if (!is_vertex_transitive(g, a.generators)) continue;
      const auto r = classify(g);
      CHECK((!r.is_grr || (r.is_cayley && r.m_full == 3)));
      CHECK((!r.is_dihedrant || r.is_cayley));
      CHECK(r.aut_order % n == 0);
      const auto la = local_action(g, a.generators, 0);
      CHECK(la.stabilizer_order * n == a.order);
      CHECK((r.m_full == 3) == (a.order == static_cast<std::uint64_t>(n)));
      // A regular subgroup gives a refinement of the arc orbits.
      const auto reg = regular_subgroup_search(g);
      if (reg.regular_subgroup) {
        CHECK(arc_orbit_count(g, *reg.regular_subgroup) == 3);
        CHECK(r.m_full <= 3);
        CHECK(a.order % PermGroup(g.order(), *reg.regular_subgroup).order() == 0);
      }
    }
  }
}

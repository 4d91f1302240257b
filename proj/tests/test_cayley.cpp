#include "doctest.h"

#include <random>
#include <set>

#include "cvt/canonical.hpp"
#include "cvt/cayley.hpp"
#include "cvt/perm_group.hpp"
#include "cvt/transitivity.hpp"
#include "support.hpp"

using namespace cvt;
using testsupport::catalog_group;
namespace nm = cvt::named;

namespace {

// Element index of k in a cyclic catalog group, by following the generator.
int cyclic_element(const FiniteGroup& g, int k) { return g.power(g.generator_marks().at(0), k); }

ConnectionSet cyclic_set(const FiniteGroup& g, std::array<int, 3> ks) {
  ConnectionSet s;
  for (int i = 0; i < 3; ++i) s.elements[i] = cyclic_element(g, ks[i]);
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

// Every 3-subset, no use of automorphisms or generation shortcuts.
std::set<CanonicalForm> naive_cubic_cayley_forms(const FiniteGroup& g) {
  std::set<CanonicalForm> out;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const std::set<int> s{a, b, c};
        if (s.contains(g.identity())) continue;
        bool closed = true;
        for (int x : s) closed = closed && s.contains(g.inv(x));
        if (!closed) continue;
        const std::array<int, 3> arr{a, b, c};
        const auto graph = cayley_graph(g, arr);
        if (graph.is_connected()) out.insert(canonical_form(graph));
      }
  return out;
}

}  // namespace

TEST_CASE("Cayley graph construction") {
  const auto z6 = catalog_group("small14", "Z6");
  const auto k33 = cayley_graph(z6, cyclic_set(z6, {1, 3, 5}).elements);
  CHECK(are_isomorphic(k33, nm::complete_bipartite(3, 3)));
  const auto z22 = catalog_group("small14", "Z2xZ2");
  const auto inv = z22.involutions();
  REQUIRE(inv.size() == 3);
  const auto k4 = cayley_graph(z22, inv);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(k4.adjacent(u, v) == (u != v));
  const auto prism = cayley_graph(z6, cyclic_set(z6, {2, 3, 4}).elements);
  CHECK(are_isomorphic(prism, ladder(3, LadderKind::Circular)));
  const std::array<int, 3> with_identity{z6.identity(), cyclic_element(z6, 3), cyclic_element(z6, 1)};
  CHECK_THROWS_AS(cayley_graph(z6, with_identity), std::invalid_argument);
  const auto not_closed = cyclic_set(z6, {1, 2, 3});
  CHECK_THROWS_AS(cayley_graph(z6, not_closed.elements), std::invalid_argument);
}

TEST_CASE("right multiplication acts by automorphisms") {
  const auto q8 = catalog_group("small14", "Q8");
  for (const auto& s : generating_connection_sets(q8)) {
    const auto g = cayley_graph(q8, s.elements);
    for (const auto& r : right_regular_generators(q8)) CHECK(g.is_automorphism(r));
  }
}

TEST_CASE("connection set orbits") {
  CHECK(connection_set_orbits(catalog_group("small14", "Z2xZ2")).size() == 1);
  const auto z6 = catalog_group("small14", "Z6");
  const auto orbits = connection_set_orbits(z6);
  REQUIRE(orbits.size() == 2);
  const std::set<ConnectionSet> got(orbits.begin(), orbits.end());
  CHECK(got.contains(cyclic_set(z6, {1, 3, 5})));
  CHECK(got.contains(cyclic_set(z6, {2, 3, 4})));
  CHECK(connection_set_orbits(catalog_group("small14", "Z3")).empty());
  CHECK(connection_set_orbits(catalog_group("small14", "Z3xZ3")).empty());
}

TEST_CASE("orbit representatives are least in their orbit") {
  for (const auto* label : {"D4", "Q8", "Z2^3", "A4", "D6", "Z2xZ6"}) {
    const auto g = catalog_group("small14", label);
    const auto aut = automorphism_group(g);
    const auto reps = connection_set_orbits(g, aut);
    const auto all = generating_connection_sets(g);
    // Closure of each representative under Aut(G).
    std::set<ConnectionSet> covered;
    for (const auto& r : reps) {
      std::vector<ConnectionSet> queue{r};
      std::set<ConnectionSet> orbit{r};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& phi : aut.generators) {
          const auto img = apply_automorphism(queue[i], phi);
          if (orbit.insert(img).second) queue.push_back(img);
        }
      CAPTURE(label);
      CHECK(*orbit.begin() == r);
      for (const auto& o : orbit) CHECK(covered.insert(o).second);
    }
    CHECK(covered == std::set<ConnectionSet>(all.begin(), all.end()));
  }
}

TEST_CASE("Cayley graphs per group") {
  const auto z6 = cayley_graphs_for_group(catalog_group("small14", "Z6"));
  REQUIRE(z6.size() == 2);
  CHECK(z6[0].form < z6[1].form);
  const auto z4 = cayley_graphs_for_group(catalog_group("small14", "Z4"));
  REQUIRE(z4.size() == 1);
  CHECK(are_isomorphic(z4[0].graph, nm::complete(4)));
  CHECK(cayley_graphs_for_group(catalog_group("small14", "Z3xZ3")).empty());
}

TEST_CASE("connection sets have one or three involutions") {
  for (const auto& e : builtin_catalog("small14")) {
    const auto g = build_group(e);
    for (const auto& s : generating_connection_sets(g)) {
      int inv = 0;
      for (int x : s.elements) inv += g.inv(x) == x;
      CHECK((inv == 1 || inv == 3));
      CHECK(g.generates(s.elements));
    }
  }
}

TEST_CASE("dedup by automorphisms loses nothing and the filter is sound") {
  std::vector<FiniteGroup> groups;
  for (const auto* name : {"small14", "families64", "two_groups64"}) {
    for (const auto& e : builtin_catalog(name)) {
      if (e.declared_order <= 24) groups.push_back(build_group(e));
    }
  }
  for (const auto& g : groups) {
    CAPTURE(g.label());
    const auto naive = naive_cubic_cayley_forms(g);
    std::set<CanonicalForm> got;
    for (const auto& c : cayley_graphs_for_group(g)) got.insert(c.form);
    CHECK(got == naive);
    if (!cubic_cayley_filter(g)) CHECK(naive.empty());
  }
}

TEST_CASE("automorphic connection sets give isomorphic graphs") {
  std::mt19937_64 rng(5);
  for (const auto& e : builtin_catalog("two_groups64")) {
    const auto g = build_group(e);
    if (g.order() > 32) continue;
    const auto aut = automorphism_group(g);
    if (aut.generators.empty()) continue;
    const PermGroup a(g.order(), aut.generators);
    for (const auto& s : connection_set_orbits(g, aut)) {
      const auto f = canonical_form(cayley_graph(g, s.elements));
      for (int k = 0; k < 5; ++k) {
        const auto phi = a.random_element(rng);
        CHECK(canonical_form(cayley_graph(g, apply_automorphism(s, phi).elements)) == f);
      }
    }
  }
}

TEST_CASE("emitted Cayley graphs are connected, cubic and vertex-transitive") {
  for (const auto* label : {"Q8", "D6", "A4", "Dic3", "Z2xZ6", "D7"}) {
    const auto g = catalog_group("small14", label);
    for (const auto& c : cayley_graphs_for_group(g)) {
      CHECK(c.graph.is_connected());
      CHECK(c.graph.is_regular(3));
      CHECK(is_vertex_transitive(c.graph, graph_automorphisms(c.graph).generators));
      const auto reg = regular_subgroup_search(c.graph);
      CHECK(reg.regular_subgroup.has_value());
      CHECK(canonical_form(cayley_graph(g, c.connection_set.elements)) == c.form);
    }
  }
}

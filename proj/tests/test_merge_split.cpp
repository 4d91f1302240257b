#include "doctest.h"

#include <map>
#include <set>

#include "cvt/canonical.hpp"
#include "cvt/enumerate.hpp"
#include "cvt/merge_split.hpp"
#include "cvt/transitivity.hpp"

using namespace cvt;
namespace nm = cvt::named;

namespace {

std::vector<Permutation> perms(const std::vector<std::string>& cycles, std::size_t n) {
  std::vector<Permutation> out;
  for (const auto& c : cycles) out.push_back(Permutation::from_cycles(c, n));
  return out;
}

std::vector<Permutation> aut(const Graph& g) { return graph_automorphisms(g).generators; }

Graph octahedron() { return nm::complete_multipartite(3, 2); }

CycleDecomposition k5_pentagons() { return {{{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}}}; }

// Rotation, reflection and (for circular ladders) the rung swap; order 4n,
// the stabiliser fixes the rung neighbour.
std::vector<Permutation> ladder_group(int n, LadderKind kind) {
  const int v = 2 * n;
  std::vector<int> rot(v), refl(v), swap(v);
  if (kind == LadderKind::Circular) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2; ++j) {
        rot[2 * i + j] = 2 * ((i + 1) % n) + j;
        refl[2 * i + j] = 2 * ((n - i) % n) + j;
        swap[2 * i + j] = 2 * i + (1 - j);
      }
    return {Permutation(rot), Permutation(refl), Permutation(swap)};
  }
  for (int x = 0; x < v; ++x) {
    rot[x] = (x + 1) % v;
    refl[x] = (v - x) % v;
  }
  return {Permutation(rot), Permutation(refl)};
}

std::vector<Graph> tetravalent_arc_transitive(int n) {
  std::vector<Graph> out;
  for (const auto& g : all_connected_tetravalent_graphs(n, 2)) {
    if (arc_orbit_count_any(g, aut(g)) == 1) out.push_back(g);
  }
  return out;
}

std::multiset<std::size_t> cycle_lengths(const CycleDecomposition& c) {
  std::multiset<std::size_t> out;
  for (const auto& cyc : c.cycles) out.insert(cyc.size());
  return out;
}

}  // namespace

TEST_CASE("cycle decomposition validation") {
  CHECK(validate_cycle_decomposition(nm::complete(5), k5_pentagons()).valid);
  const CycleDecomposition pentagon{{{0, 1, 2, 3, 4}}};
  const auto bad = validate_cycle_decomposition(nm::complete(5), pentagon);
  CHECK_FALSE(bad.valid);
  CHECK(bad.diagnostic.find("not covered") != std::string::npos);
  const CycleDecomposition triangles{{{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}}};
  CHECK(validate_cycle_decomposition(octahedron(), triangles).valid);
  const CycleDecomposition repeated{{{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}, {0, 1, 2}}};
  CHECK_FALSE(validate_cycle_decomposition(nm::complete(5), repeated).valid);
  const CycleDecomposition non_edge{{{0, 1, 2, 3}}};
  CHECK_FALSE(validate_cycle_decomposition(nm::cycle(5), non_edge).valid);
  const CycleDecomposition short_cycle{{{0, 1}}};
  CHECK_FALSE(validate_cycle_decomposition(nm::path(2), short_cycle).valid);
}

TEST_CASE("normalisation and cycle files") {
  CHECK(normalize_cycle({3, 0, 4, 1, 2}) == std::vector<int>{0, 3, 2, 1, 4});
  CHECK(normalize_cycle({2, 1, 0}) == std::vector<int>{0, 1, 2});
  const auto text = write_cycles(k5_pentagons(), 5);
  const auto [back, n] = parse_cycles(text);
  CHECK(n == 5);
  CHECK(back == normalize(k5_pentagons()));
  const auto [c, m] = parse_cycles("# k5\ncycles 2 over 5\n0 1 2 3 4\n0 2 4 1 3\n");
  CHECK(m == 5);
  CHECK(c.cycles.size() == 2);
  CHECK_THROWS_AS(parse_cycles("cycles 3 over 5\n0 1 2 3 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("cycle 1 over 5\n0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("cycles 1 over 3\n0 1 x\n"), std::invalid_argument);
}

TEST_CASE("cycle permutations") {
  const auto c = k5_pentagons();
  const auto f20 = perms({"(0 1 2 3 4)", "(1 2 4 3)"}, 5);
  CHECK(preserves_decomposition(c, f20));
  CHECK(cycle_permutation(c, f20[1]) == std::vector<int>{1, 0});
  const auto t = Permutation::from_cycles("(0 1)", 5);
  CHECK_FALSE(preserves_decomposition(c, std::span<const Permutation>(&t, 1)));
  CHECK_THROWS_AS(cycle_permutation(c, t), std::invalid_argument);
}

TEST_CASE("partner map") {
  const auto k4 = nm::complete(4);
  const auto t = truncation(k4);
  const auto p = partner_map(t, aut(t));
  for (int v = 0; v < 12; ++v) {
    CHECK(p[p[v]] == v);
    CHECK(v / 3 != p[v] / 3);  // leaves the triangle
    CHECK(t.adjacent(v, p[v]));
  }
  const auto prism = ladder(3, LadderKind::Circular);
  const auto q = partner_map(prism, aut(prism));
  for (int v = 0; v < 6; ++v) CHECK(q[v] == (v ^ 1));  // rung
  CHECK_THROWS_AS(partner_map(nm::petersen(), aut(nm::petersen())), std::invalid_argument);
}

TEST_CASE("partner map is equivariant") {
  const auto t = truncation(nm::petersen());
  const auto gens = aut(t);
  const auto p = partner_map(t, gens);
  for (const auto& g : gens)
    for (int v = 0; v < 30; ++v) CHECK(p[g[v]] == g[p[v]]);
}

TEST_CASE("degeneracy") {
  const auto k4 = perms({"(0 1 2 3)", "(1 3)"}, 4);
  const auto d = is_degenerate(nm::complete(4), k4);
  CHECK(d.degenerate);
  CHECK(d.kind == LadderKind::Moebius);
  CHECK(d.ladder_n == 2);
  const auto prism = ladder(3, LadderKind::Circular);
  const auto e = is_degenerate(prism, aut(prism));
  CHECK(e.degenerate);
  CHECK(e.kind == LadderKind::Circular);
  CHECK(e.ladder_n == 3);
  const auto t = truncation(nm::complete(4));
  CHECK_FALSE(is_degenerate(t, aut(t)).degenerate);
}

TEST_CASE("degenerate pairs are exactly the ladders") {
  for (int n = 2; n <= 20; ++n) {
    for (auto kind : {LadderKind::Circular, LadderKind::Moebius}) {
      if (kind == LadderKind::Circular && n < 3) continue;
      const auto g = ladder(n, kind);
      const auto d = is_degenerate(g, ladder_group(n, kind));
      CAPTURE(n);
      REQUIRE(d.degenerate);
      REQUIRE(d.kind.has_value());
      CHECK(are_isomorphic(g, ladder(d.ladder_n, *d.kind)));
      CHECK(2 * d.ladder_n == static_cast<int>(g.order()));
      try {
        merge(g, ladder_group(n, kind));
        FAIL("merge accepted a ladder");
      } catch (const DegeneratePairError& err) {
        CHECK(err.ladder_n() == d.ladder_n);
        CHECK(std::string(err.what()).find("degenerate pair") != std::string::npos);
      }
    }
  }
}

TEST_CASE("merge") {
  const auto t = truncation(nm::complete(4));
  const auto r = merge(t, aut(t));
  CHECK(are_isomorphic(r.quotient, octahedron()));
  CHECK(r.decomposition.cycles.size() == 4);
  for (const auto& c : r.decomposition.cycles) CHECK(c.size() == 3);
  CHECK(r.matching.size() == 6);
  CHECK(validate_cycle_decomposition(r.quotient, r.decomposition).valid);
  CHECK(preserves_decomposition(r.decomposition, r.induced_group));
  CHECK(arc_orbit_count_any(r.quotient, r.induced_group) == 1);

  const auto prism = ladder(3, LadderKind::Circular);
  CHECK_THROWS_AS(merge(prism, aut(prism)), DegeneratePairError);
  CHECK_THROWS_AS(merge(nm::petersen(), aut(nm::petersen())), std::invalid_argument);
}

TEST_CASE("split") {
  const auto f20 = perms({"(0 1 2 3 4)", "(1 2 4 3)"}, 5);
  const auto s = split(nm::complete(5), k5_pentagons(), f20);
  CHECK(are_isomorphic(s.graph, nm::petersen()));
  for (const auto& g : s.inherited) CHECK(s.graph.is_automorphism(g));
  CHECK(s.vertices.size() == 10);

  const CycleDecomposition triangles{{{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}}};
  CHECK(are_isomorphic(split(octahedron(), triangles).graph, truncation(nm::complete(4))));
  const CycleDecomposition pentagon{{{0, 1, 2, 3, 4}}};
  CHECK_THROWS_AS(split(nm::complete(5), pentagon), std::invalid_argument);
  CHECK_THROWS_AS(split(nm::cycle(5), CycleDecomposition{{{0, 1, 2, 3, 4}}}), std::invalid_argument);
}

TEST_CASE("split then merge recovers the pair") {
  const auto f20 = perms({"(0 1 2 3 4)", "(1 2 4 3)"}, 5);
  const auto s = split(nm::complete(5), k5_pentagons(), f20);
  const auto r = merge(s.graph, s.inherited);
  CHECK(are_isomorphic(r.quotient, nm::complete(5)));
  CHECK(cycle_lengths(r.decomposition) == std::multiset<std::size_t>{5, 5});
  CHECK(are_isomorphic(split(r.quotient, r.decomposition).graph, s.graph));
}

TEST_CASE("local block decompositions") {
  const auto f20 = perms({"(0 1 2 3 4)", "(1 2 4 3)"}, 5);
  CHECK(normalize(local_block_decomposition(nm::complete(5), f20)) == normalize(k5_pentagons()));
  const auto oct = octahedron();
  const auto c = local_block_decomposition(oct, aut(oct));
  CHECK(cycle_lengths(c) == std::multiset<std::size_t>{4, 4, 4});
  CHECK(validate_cycle_decomposition(oct, c).valid);
  const auto k44 = nm::complete_bipartite(4, 4);
  const auto v4v4 = perms({"(0 1)(2 3)", "(0 2)(1 3)", "(4 5)(6 7)", "(4 6)(5 7)", "(0 4)(1 5)(2 6)(3 7)"}, 8);
  CHECK_THROWS_AS(local_block_decomposition(k44, v4v4), std::invalid_argument);
}

TEST_CASE("root pairings") {
  const auto f20 = perms({"(0 1 2 3 4)", "(1 2 4 3)"}, 5);
  CHECK(pairing_by_index(0) == std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}});
  CHECK(pairing_by_index(2) == std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}});
  // Neighbours of 0 in K5 are 1 2 3 4; the 4-cycle (1 2 4 3) keeps {1,4}{2,3}.
  const auto c = decomposition_from_root_pairing(nm::complete(5), f20, 0, 2);
  CHECK(normalize(c) == normalize(k5_pentagons()));
  CHECK_THROWS(decomposition_from_root_pairing(nm::complete(5), f20, 0, 0));
}

TEST_CASE("arc-transitive decompositions of small tetravalent graphs") {
  const auto k5 = arc_transitive_decompositions(nm::complete(5));
  REQUIRE(k5.size() == 1);
  CHECK(cycle_lengths(k5[0].decomposition) == std::multiset<std::size_t>{5, 5});
  const auto oct = arc_transitive_decompositions(octahedron());
  REQUIRE(oct.size() == 2);
  std::set<std::multiset<std::size_t>> shapes;
  for (const auto& d : oct) shapes.insert(cycle_lengths(d.decomposition));
  CHECK(shapes == std::set<std::multiset<std::size_t>>{{3, 3, 3, 3}, {4, 4, 4}});
  for (const auto& d : oct) {
    CHECK(preserves_decomposition(d.decomposition, d.stabilizer));
    CHECK(arc_orbit_count_any(octahedron(), d.stabilizer) == 1);
  }
}

TEST_CASE("split and merge are inverse on every arc-transitive decomposition up to order 9") {
  for (int n = 5; n <= 9; ++n) {
    for (const auto& lambda : tetravalent_arc_transitive(n)) {
      for (const auto& d : arc_transitive_decompositions(lambda)) {
        CAPTURE(n);
        REQUIRE(validate_cycle_decomposition(lambda, d.decomposition).valid);
        const auto s = split(lambda, d.decomposition, d.stabilizer);
        CHECK(s.graph.is_regular(3));
        CHECK(s.graph.is_connected());
        CHECK(s.graph.order() == 2 * lambda.order());
        CHECK(is_vertex_transitive(s.graph, s.inherited));
        CHECK(local_action(s.graph, s.inherited, 0).type == LocalType::Z2Fix1);
        const auto r = merge(s.graph, s.inherited);
        CHECK(are_isomorphic(r.quotient, lambda));
        CHECK(cycle_lengths(r.decomposition) == cycle_lengths(d.decomposition));
        CHECK(are_isomorphic(split(r.quotient, r.decomposition).graph, s.graph));
      }
    }
  }
}

TEST_CASE("merge roundtrip on vertex-transitive cubic graphs with m = 2") {
  for (int n = 6; n <= 14; n += 2) {
    for (const auto& g : all_connected_cubic_graphs(n, 4)) {
      const auto gens = aut(g);
      if (!is_vertex_transitive(g, gens) || arc_orbit_count(g, gens) != 2) continue;
      if (local_action(g, gens, 0).type != LocalType::Z2Fix1) continue;
      if (is_degenerate(g, gens).degenerate) continue;
      const auto r = merge(g, gens);
      CHECK(are_isomorphic(split(r.quotient, r.decomposition).graph, g));
    }
  }
}

TEST_CASE("cubic vertex-transitive graphs with m = 2 are ladders or splits") {
  // Splits of every arc-transitive decomposition of orders 3..7.
  std::set<CanonicalForm> splits;
  for (int k = 5; k <= 7; ++k)
    for (const auto& lambda : tetravalent_arc_transitive(k))
      for (const auto& d : arc_transitive_decompositions(lambda))
        splits.insert(canonical_form(split(lambda, d.decomposition).graph));
  std::set<CanonicalForm> ladders;
  for (int k = 2; k <= 7; ++k) {
    ladders.insert(canonical_form(ladder(k, LadderKind::Moebius)));
    if (k >= 3) ladders.insert(canonical_form(ladder(k, LadderKind::Circular)));
  }
  for (int n = 4; n <= 14; n += 2) {
    for (const auto& g : all_connected_cubic_graphs(n, 4)) {
      const auto gens = aut(g);
      if (!is_vertex_transitive(g, gens) || arc_orbit_count(g, gens) != 2) continue;
      const auto f = canonical_form(g);
      CHECK((ladders.contains(f) || splits.contains(f)));
    }
  }
}

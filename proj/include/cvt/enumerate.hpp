#pragma once

#include <cstdint>
#include <vector>

#include "cvt/graph.hpp"

namespace cvt {

struct EnumerationStats {
  std::uint64_t labelled_leaves = 0;
  std::uint64_t canonical_calls = 0;
};

/// All connected `valency`-regular simple graphs on `n` vertices up to
/// isomorphism, sorted by canonical form (each returned in canonical
/// labelling).
///
/// Graphs are built vertex by vertex in breadth-first labelling order (the
/// neighbours of vertex i that are new get the next free labels), so only
/// BFS-labelled graphs are visited. Leaves whose root does not carry the
/// largest distance profile are dropped; the rest are deduplicated by
/// canonical form. Work is split across `workers` threads.
std::vector<Graph> all_connected_regular_graphs(int n, int valency, unsigned workers = 1,
                                                EnumerationStats* stats = nullptr);

/// Connected cubic graphs; n must be even with 4 <= n <= 14.
std::vector<Graph> all_connected_cubic_graphs(int n, unsigned workers = 1);

/// Connected tetravalent graphs; 5 <= n <= 12.
std::vector<Graph> all_connected_tetravalent_graphs(int n, unsigned workers = 1);

}  // namespace cvt

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvt/graph.hpp"
#include "cvt/permutation.hpp"

namespace cvt {

/// Isomorphism-class fingerprint: the graph6 string of the canonically
/// relabelled graph. Equal forms mean isomorphic graphs.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Full output of one canonical-labelling search.
struct CanonicalLabeling {
  CanonicalForm form;
  /// vertex -> canonical position
  Permutation labeling;
  /// Automorphisms found during the search. Together they generate the
  /// (colour-preserving) automorphism group.
  std::vector<Permutation> automorphisms;
  std::uint64_t search_nodes = 0;
};

/// Individualisation-refinement search. Refinement splits cells by the
/// number of neighbours in a splitter cell until the partition is equitable;
/// the target cell is the first smallest non-singleton cell; among leaves the
/// one with the smallest graph6 bit string wins. Branches equivalent under
/// automorphisms already found are skipped.
///
/// `vertex_colors` (optional, one value per vertex) restricts to
/// colour-preserving relabellings; the colour sequence in canonical order is
/// then appended to the form as "|c0,c1,...".
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> vertex_colors = {});

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// An isomorphism a -> b (as a vertex map), if one exists.
std::optional<Permutation> find_graph_isomorphism(const Graph& a, const Graph& b);

struct GraphAutomorphisms {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

GraphAutomorphisms graph_automorphisms(const Graph& g, std::span<const int> vertex_colors = {});

}  // namespace cvt

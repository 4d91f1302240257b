#pragma once

#include <array>
#include <span>
#include <vector>

#include "cvt/canonical.hpp"
#include "cvt/graph.hpp"
#include "cvt/group.hpp"

namespace cvt {

/// Inverse-closed, identity-free 3-subset of a group (sorted element indices).
struct ConnectionSet {
  std::array<int, 3> elements{};
  friend auto operator<=>(const ConnectionSet&, const ConnectionSet&) = default;
  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
};

/// Cay(G, S): vertices are the group elements, u ~ v iff u v^-1 in S, so the
/// neighbours of v are s v. Right multiplication acts as automorphisms.
/// Throws std::invalid_argument if S contains the identity, repeats an
/// element or is not inverse-closed.
Graph cayley_graph(const FiniteGroup& g, std::span<const int> connection_set);

/// The right-regular action x -> x h for each generator mark (or each
/// element of a small generating set), as automorphisms of any Cayley graph
/// of g.
std::vector<Permutation> right_regular_generators(const FiniteGroup& g);

/// Every inverse-closed identity-free generating 3-subset (three involutions,
/// or an involution with a pair {x, x^-1}), sorted, without deduplication.
std::vector<ConnectionSet> generating_connection_sets(const FiniteGroup& g);

/// One representative per Aut(G)-orbit of generating connection sets: the
/// lexicographically least triple of each orbit, sorted.
std::vector<ConnectionSet> connection_set_orbits(const FiniteGroup& g);
std::vector<ConnectionSet> connection_set_orbits(const FiniteGroup& g,
                                                 const AutomorphismGroup& aut);

/// Image of a connection set under an automorphism given on element indices.
ConnectionSet apply_automorphism(const ConnectionSet& s, const Permutation& phi);

struct CayleyEntry {
  CanonicalForm form;
  Graph graph;  // canonically labelled
  ConnectionSet connection_set;
};

/// Connected cubic Cayley graphs of g up to isomorphism, sorted by canonical
/// form. Does not consult the abelianisation filter.
std::vector<CayleyEntry> cayley_graphs_for_group(const FiniteGroup& g);

}  // namespace cvt

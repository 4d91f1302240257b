#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvt/canonical.hpp"
#include "cvt/graph.hpp"
#include "cvt/permutation.hpp"

namespace cvt {

/// Permutation group induced by a vertex stabiliser on the neighbourhood.
enum class LocalType {
  Trivial,
  Z2Fix1,  // order 2 on three neighbours, fixing one
  Z3,
  S3,
  Z2xZ2,  // regular Klein four-group on four neighbours
  Z4,
  D4,
  Other,
};

std::string to_string(LocalType type);

/// Throws std::invalid_argument("not an automorphism") if some generator
/// does not preserve adjacency.
void require_automorphisms(const Graph& g, std::span<const Permutation> gens);

bool is_vertex_transitive(const Graph& g, std::span<const Permutation> gens);

/// Number of orbits of <gens> on arcs (ordered adjacent pairs), any valency.
std::size_t arc_orbit_count_any(const Graph& g, std::span<const Permutation> gens);
/// Orbit label for each arc; arc (u, k-th neighbour) has index offset(u) + k
/// where offset(u) is the sum of degrees of vertices below u.
std::vector<int> arc_orbits(const Graph& g, std::span<const Permutation> gens);

/// m for a vertex-transitive group on a cubic graph; always 1, 2 or 3.
/// Throws std::invalid_argument on non-cubic or intransitive input.
int arc_orbit_count(const Graph& g, std::span<const Permutation> gens);

struct LocalAction {
  LocalType type = LocalType::Other;
  std::vector<Permutation> stabilizer_generators;  // on all vertices
  std::uint64_t stabilizer_order = 1;
  /// Induced generators on neighbour positions 0..valency-1 of v.
  std::vector<Permutation> induced_generators;
  std::uint64_t induced_order = 1;
};

/// Stabiliser of `v` and its action on the neighbourhood of `v`. Requires a
/// vertex-transitive group and valency 3 or 4.
LocalAction local_action(const Graph& g, std::span<const Permutation> gens, int v);

inline constexpr std::uint64_t kDefaultRegularSearchCap = 1'000'000;

struct RegularSubgroupResult {
  bool vertex_transitive = false;
  /// Generators of the first regular subgroup found.
  std::optional<std::vector<Permutation>> regular_subgroup;
  bool dihedral = false;
  std::size_t regular_subgroups_seen = 0;
};

/// Regular subgroups of Aut(g) by backtracking: grow a semiregular subgroup
/// by an element sending vertex 0 to the least uncovered vertex, until it
/// has order n. Stops once some regular subgroup is dihedral. Throws
/// LimitExceeded when |Aut(g)| exceeds `cap`.
RegularSubgroupResult regular_subgroup_search(const Graph& g,
                                              std::uint64_t cap = kDefaultRegularSearchCap);
/// Same, inside the group generated by `gens` instead of Aut(g).
RegularSubgroupResult regular_subgroup_search(const Graph& g, std::span<const Permutation> gens,
                                              std::uint64_t cap = kDefaultRegularSearchCap);

/// True iff the permutations (a regular group, listed in full) form a
/// dihedral group: an index-2 cyclic subgroup inverted by an involution
/// outside it. Z2 and Z2 x Z2 count as dihedral.
bool is_dihedral_group(std::span<const Permutation> elements);

struct ClassificationRecord {
  CanonicalForm canonical;
  std::size_t order = 0;
  int m_full = 0;
  bool is_cayley = false;
  bool is_grr = false;
  bool is_dihedrant = false;
  int girth = 0;  // 0 for forests (never for cubic graphs)
  int diameter = 0;
  bool hamiltonian = false;
  std::uint64_t aut_order = 0;
};

/// Requires a connected cubic vertex-transitive graph.
ClassificationRecord classify(const Graph& g);

}  // namespace cvt

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvt/graph.hpp"
#include "cvt/permutation.hpp"

namespace cvt {

/// Edge partition of a host graph into cycles. Each cycle is a vertex
/// sequence v0 v1 ... v(k-1) with edges v(i) v(i+1) and v(k-1) v0.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// Rotates each cycle to start at its least vertex, orients it towards the
/// lesser of its two neighbours, then sorts the cycles.
CycleDecomposition normalize(CycleDecomposition c);
std::vector<int> normalize_cycle(std::vector<int> cycle);

struct DecompositionCheck {
  bool valid = false;
  std::string diagnostic;  // empty when valid
};

/// Every edge on exactly one cycle; every cycle a closed walk of >= 3
/// distinct vertices along edges of `host`.
DecompositionCheck validate_cycle_decomposition(const Graph& host, const CycleDecomposition& c);

/// True iff every generator maps each cycle onto a cycle of `c`.
bool preserves_decomposition(const CycleDecomposition& c, std::span<const Permutation> gens);

/// Image of cycle indices under `p`; throws if `p` does not preserve `c`.
std::vector<int> cycle_permutation(const CycleDecomposition& c, const Permutation& p);

/// Text format: "cycles <k> over <n>" then one cycle per line.
std::string write_cycles(const CycleDecomposition& c, std::size_t host_order);
/// Returns the decomposition and the host order from the header.
std::pair<CycleDecomposition, std::size_t> parse_cycles(std::string_view text);

/// For a locally-Z2^[3] pair: the neighbour v' of each v with G_v = G_v'.
/// Throws std::invalid_argument if the pair is not locally-Z2^[3].
std::vector<int> partner_map(const Graph& g, std::span<const Permutation> gens);

struct Degeneracy {
  bool degenerate = false;
  std::optional<LadderKind> kind;
  int ladder_n = 0;
};

/// Degenerate iff two partner pairs are joined by more than one edge; then
/// the graph is matched against circular and Moebius ladders of its order.
Degeneracy is_degenerate(const Graph& g, std::span<const Permutation> gens);

class DegeneratePairError : public std::invalid_argument {
 public:
  DegeneratePairError(LadderKind kind, int n);
  LadderKind kind() const { return kind_; }
  int ladder_n() const { return n_; }

 private:
  LadderKind kind_;
  int n_;
};

/// Raised when a merge output fails one of its asserted properties.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct MergeResult {
  /// Quotient by the partner matching; vertex i is the i-th pair ordered by
  /// least member.
  Graph quotient;
  CycleDecomposition decomposition;
  std::vector<std::pair<int, int>> matching;  // (v, v') with v < v'
  std::vector<int> pair_of;                   // vertex of g -> quotient vertex
  std::vector<Permutation> induced_group;     // on quotient vertices
};

/// Contracts the partner matching of a non-degenerate locally-Z2^[3] pair.
/// Checks at run time that the quotient is connected, tetravalent, of half
/// order, that the induced action is faithful and arc-transitive and that it
/// preserves the decomposition; throws ContractViolation otherwise and
/// DegeneratePairError on degenerate input.
MergeResult merge(const Graph& g, std::span<const Permutation> gens);

struct SplitResult {
  Graph graph;
  std::vector<std::pair<int, int>> vertices;  // (v, cycle index), sorted
  std::vector<Permutation> inherited;         // induced by the input group
};

/// Vertices are pairs (v, C) with v on C; (v, C1) ~ (v, C2) for C1 != C2 and
/// (v1, C) ~ (v2, C) when v1 v2 is an edge of C.
SplitResult split(const Graph& lambda, const CycleDecomposition& c,
                  std::span<const Permutation> gens = {});

/// The pairing of the edges at vertex 0 as neighbour positions {a, b}, {c, d}
/// (0 = {0,1}{2,3}, 1 = {0,2}{1,3}, 2 = {0,3}{1,2}).
std::array<std::array<int, 2>, 2> pairing_by_index(int index);

/// Cycle decomposition obtained by pairing edges at each vertex with the
/// image of the pairing `pairing_index` at `root` under a transversal of
/// <gens>. Throws if the result is not a cycle decomposition.
CycleDecomposition decomposition_from_root_pairing(const Graph& lambda,
                                                   std::span<const Permutation> gens, int root,
                                                   int pairing_index);

/// For an arc-transitive tetravalent pair with local action Z4 or D4: pairs
/// the edges at each vertex by the unique block system of the stabiliser and
/// follows the pairs around. Throws std::invalid_argument otherwise.
CycleDecomposition local_block_decomposition(const Graph& lambda, std::span<const Permutation> gens);

struct ArcTransitiveDecomposition {
  CycleDecomposition decomposition;
  std::vector<Permutation> stabilizer;  // generators, acting on lambda
  std::uint64_t stabilizer_order = 0;
};

/// Every cycle decomposition of a tetravalent arc-transitive graph whose
/// stabiliser in Aut(lambda) is arc-transitive, one per Aut(lambda)-class.
std::vector<ArcTransitiveDecomposition> arc_transitive_decompositions(const Graph& lambda);

}  // namespace cvt

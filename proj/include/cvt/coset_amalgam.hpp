#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvt/graph.hpp"
#include "cvt/group.hpp"
#include "cvt/merge_split.hpp"
#include "cvt/permutation.hpp"

namespace cvt {

/// Generator index with exponent +1 or -1.
struct Letter {
  int generator = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Parses words over single-letter generators. Supports juxtaposition,
/// powers u^k (k may be negative), conjugates u^g = g^-1 u g for a generator
/// g, commutators [u,v] = u^-1 v^-1 u v and parentheses. Spaces are ignored.
/// Throws std::invalid_argument on syntax errors or unknown generators.
Word parse_word(std::string_view text, std::span<const std::string> generator_names);

/// Free reduction (cancels adjacent inverse letters).
Word reduce_word(Word w);
Word inverse_word(const Word& w);

/// Letters separated by spaces, inverses written as g^-1.
std::string format_word(const Word& w, std::span<const std::string> generator_names);

struct Presentation {
  std::string label;
  std::vector<std::string> generator_names;
  std::vector<std::string> relator_text;  // as printed
  std::vector<Word> relators;
  std::vector<std::string> local_generator_names;
  int local_order = 0;
  /// The generator outside the local subgroup that reverses an arc.
  std::string arc_generator;

  int generator_index(std::string_view name) const;
};

/// Builds a presentation from printed relators (parsed with parse_word).
Presentation make_presentation(std::string label, std::vector<std::string> generators,
                               std::vector<std::string> relators,
                               std::vector<std::string> local_generators, int local_order,
                               std::string arc_generator);

/// Universal groups for the locally-Z4 and locally-D4 pairs with stabiliser
/// order at most 32, one entry per printed row.
const std::vector<Presentation>& amalgam_table();

/// Value of a word in g under generator images.
int evaluate_word(const FiniteGroup& g, const Word& w, std::span<const int> images);

struct CosetGraph {
  Graph graph;
  std::vector<int> subgroup;                // sorted elements of H
  std::vector<int> coset_of;                // element -> vertex
  std::vector<int> representative;          // vertex -> least element of the coset
  std::size_t double_coset_valency = 0;     // |HaH| / |H|
  bool self_paired = true;                  // a^-1 in HaH
  bool multi_edge_collapse = false;         // graph degree differs from |HaH|/|H|
  std::vector<Permutation> right_action;    // Hx -> Hxg for generators g of G
};

/// Cos(G, H, a): right cosets of H = <h_gens>, with Hg ~ Hag. Vertices are
/// numbered by least element. Throws std::invalid_argument when a lies in H.
CosetGraph coset_graph(const FiniteGroup& g, std::span<const int> h_gens, int a);

struct RegularMapPair {
  CosetGraph coset;
  /// From the cycles through H of <ax>, <ay> and <axy>, in that order.
  std::array<CycleDecomposition, 3> decompositions;
};

/// Requires x^2 = y^2 = a^2 = [x,y] = 1, <x,y,a> = G and valency 4.
/// Throws std::invalid_argument naming the failed condition.
RegularMapPair regular_map_pair(const FiniteGroup& g, int x, int y, int a);

/// A concrete group with images of the generators of a presentation.
struct MarkedQuotient {
  int row = 0;  // 1-based index into amalgam_table()
  FiniteGroup group;
  std::map<std::string, int> images;
};

/// File format: "quotient <row>" then lines "name = <cycles>". The group is
/// the closure of the given permutations (in file order).
MarkedQuotient parse_marked_quotient(std::string_view text);
MarkedQuotient read_marked_quotient(const std::string& path);
std::string write_marked_quotient(const MarkedQuotient& q, std::span<const std::string> order);

struct QuotientCheck {
  bool valid = false;
  std::string diagnostic;
};

/// Every relator maps to the identity, the images generate the group and the
/// local generators generate a subgroup of order local_order. Throws
/// std::invalid_argument for unknown or missing generator names.
QuotientCheck verify_quotient(const Presentation& p, const MarkedQuotient& q);

/// Cos(G, pi(L), pi(arc generator)) for a verified quotient.
CosetGraph quotient_coset_graph(const Presentation& p, const MarkedQuotient& q);

/// Every element of <gens> has order at most n. Checks first that every
/// point stabiliser is a p-group (throws std::invalid_argument otherwise)
/// and throws LimitExceeded when the group order exceeds `cap`.
bool element_order_bound_check(std::span<const Permutation> gens, std::size_t n, int p,
                               std::uint64_t cap = 1'000'000);

}  // namespace cvt

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cvt/perm_group.hpp"
#include "cvt/permutation.hpp"

namespace cvt {

inline constexpr std::size_t kDefaultGroupOrderCap = 20480;
inline constexpr std::size_t kDefaultAutomorphismOrderCap = 2048;

/// A finite group materialised as a multiplication table over element
/// indices 0..order-1.
///
/// Groups built from permutation generators keep their permutation
/// realisation so that elements can be looked up by permutation.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Takes ownership of a row-major `order x order` table. Computes inverses;
  /// throws std::invalid_argument if `identity` is not a two-sided identity
  /// or some element lacks an inverse.
  FiniteGroup(std::size_t order, std::vector<int> table, int identity, std::string label = {},
              std::vector<int> generator_marks = {});

  std::size_t order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int a, long long k) const;
  int element_order(int a) const;
  /// [a, b] = a^-1 b^-1 a b
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  const std::vector<int>& generator_marks() const { return generator_marks_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool has_realization() const { return !realization_.empty(); }
  /// Permutation realising element `a` (only when has_realization()).
  const Permutation& realization(int a) const { return realization_[a]; }
  const std::vector<Permutation>& realization() const { return realization_; }
  /// Index of the element realised by `p`, if any.
  std::optional<int> index_of(const Permutation& p) const;

  /// Closure of `gens` under multiplication, as a sorted element list.
  std::vector<int> subgroup(std::span<const int> gens) const;
  bool generates(std::span<const int> gens) const;
  bool is_abelian() const;
  std::vector<int> center() const;
  std::vector<int> involutions() const;
  /// Sorted multiset of element orders.
  std::vector<int> order_profile() const;
  /// Right-regular action of `g`: x -> x g.
  Permutation right_regular(int g) const;

  /// Associativity over all triples when order <= 256, else over `samples`
  /// pseudo-random triples.
  bool check_associativity(std::size_t samples = 200000) const;
  /// Identity and inverse table consistency.
  bool check_inverses() const;

 private:
  friend FiniteGroup group_from_generators(std::span<const Permutation>, std::string,
                                           std::size_t);

  std::size_t order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<int> generator_marks_;
  std::string label_;
  std::vector<Permutation> realization_;
  std::unordered_map<Permutation, int, PermutationHash> lookup_;
};

/// Closure of permutation generators. Elements are numbered breadth-first
/// from the identity (index 0), applying generators in input order by right
/// multiplication. Throws std::invalid_argument on empty or mismatched input,
/// LimitExceeded ("group too large") beyond `cap`.
FiniteGroup group_from_generators(std::span<const Permutation> gens, std::string label = {},
                                  std::size_t cap = kDefaultGroupOrderCap);

/// Commutator subgroup, as a sorted element list containing the identity.
std::vector<int> derived_subgroup(const FiniteGroup& g);

/// G/N for a normal subgroup N (sorted element list). Cosets are numbered by
/// their least element; generator marks are carried over.
FiniteGroup quotient_group(const FiniteGroup& g, std::span<const int> normal_subgroup);

/// Invariant factors of a finite abelian group: each divides the next, all >= 2.
struct AbelianInvariants {
  std::vector<int> cyclic_orders;
  std::uint64_t product() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariant factors of an abelian group (repeatedly splits off a cyclic
/// factor of maximal order). Throws std::invalid_argument if not abelian.
AbelianInvariants abelian_invariants(const FiniteGroup& abelian);
AbelianInvariants abelianization(const FiniteGroup& g);

/// True iff G/G' is Z2^3, Z2 x Zr (r >= 2) or Zr (r >= 1): the only
/// abelianisations possible for a group with a connected Cayley graph of
/// valency at most 3.
bool cubic_cayley_filter(const FiniteGroup& g);

/// Greedy small generating set: repeatedly adds the element that enlarges
/// the generated subgroup most (ties to the smaller index).
std::vector<int> small_generating_set(const FiniteGroup& g);

struct AutomorphismGroup {
  /// Automorphisms as permutations of element indices.
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

/// Aut(G) by backtracking over the images of a small generating set, pruned
/// by element orders and by orbits of automorphisms already found.
/// Throws LimitExceeded when |G| > cap.
AutomorphismGroup automorphism_group(const FiniteGroup& g,
                                     std::size_t cap = kDefaultAutomorphismOrderCap);

/// Extends gens[i] -> images[i] to a homomorphism G -> H, if one exists.
/// `gens` must generate G.
std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& g,
                                                    std::span<const int> gens,
                                                    const FiniteGroup& h,
                                                    std::span<const int> images);

/// An isomorphism G -> H as an element map, if the groups are isomorphic.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

bool is_power_of_two(std::uint64_t n);

/// Membership in the class of 2-groups generated by three involutions or by
/// an involution together with one further element. The trivial group is
/// treated as a member.
bool r_class_member(const FiniteGroup& g);

/// G/C for every central subgroup C of order 2, ordered by the central
/// involution's index.
std::vector<FiniteGroup> central_quotients_by_order2(const FiniteGroup& g);

}  // namespace cvt

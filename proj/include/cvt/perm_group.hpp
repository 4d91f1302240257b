#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "cvt/permutation.hpp"

namespace cvt {

/// Thrown when a computation would exceed a configured size cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation group given by generators, backed by a base and strong
/// generating set (deterministic Schreier-Sims).
///
/// The base starts with `base_prefix` (in order) and is extended with the
/// first point moved by a new strong generator. Strong generators fixing the
/// first k base points generate the k-th stabiliser in the chain.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<int> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<int> base() const;

  /// Group order; throws LimitExceeded if it does not fit in 64 bits.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return levels_.empty(); }

  /// Generators of the pointwise stabiliser of the first `depth` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;
  /// Generators of the stabiliser of `point` (a fresh chain is built when
  /// `point` is not the first base point).
  std::vector<Permutation> point_stabilizer(int point) const;

  /// Orbit of `point` under the group, in breadth-first order.
  std::vector<int> orbit(int point) const;
  bool is_transitive() const;

  /// Some element mapping the first base point to `point`, if any.
  std::optional<Permutation> transversal_element(int point) const;

  /// Calls `fn` on every element. Throws LimitExceeded when the order exceeds
  /// `cap`.
  void for_each_element(const std::function<void(const Permutation&)>& fn,
                        std::uint64_t cap = 1'000'000) const;
  std::vector<Permutation> elements(std::uint64_t cap = 1'000'000) const;

  /// Uniformly random element.
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    int point = 0;
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into transversal, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };

  void rebuild_orbit(Level& level);
  std::pair<std::size_t, Permutation> sift(Permutation h, std::size_t from) const;
  void add_level(int point);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace cvt

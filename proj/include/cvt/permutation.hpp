#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cvt {

/// A permutation of {0, ..., degree-1}, stored as its image list.
///
/// Products follow the right-action convention used throughout the
/// library: `(p * q)(x) == q(p(x))`, i.e. apply `p` first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
  /// "()" is the identity. Throws std::invalid_argument on malformed input.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  int operator[](std::size_t point) const { return images_[point]; }
  int apply(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Order of the permutation (lcm of cycle lengths).
  std::uint64_t order() const;
  /// Number of fixed points.
  std::size_t fixed_points() const;

  /// Disjoint-cycle notation; the identity prints as "()".
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Orbits of the group generated by `gens` on {0..degree-1}: returns, for
/// each point, the least point of its orbit.
std::vector<int> orbit_representatives(std::span<const Permutation> gens,
                                       std::size_t degree);

/// Number of orbits of `gens` on {0..degree-1}.
std::size_t orbit_count(std::span<const Permutation> gens, std::size_t degree);

}  // namespace cvt

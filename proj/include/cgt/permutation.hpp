#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cgt {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), i.e. points are acted on
/// from the right. Conjugation x^g is g^-1 * x * g.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;
  std::uint64_t order() const;

  /// Disjoint cycle notation with 0-based points, "()" for the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation commutator(const Permutation& a, const Permutation& b);
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Order of the permutation with the given images (lcm of cycle lengths).
std::uint64_t permutation_order(std::span<const Point> images);

}  // namespace cgt

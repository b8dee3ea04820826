#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cgt/permutation.hpp"

namespace cgt {

inline constexpr std::size_t kDefaultOrderCap = 200'000;

/// Open-addressing map from image arrays to element indices.
class ElementIndex {
 public:
  explicit ElementIndex(std::size_t degree = 0) : degree_(degree) {}

  void reserve(std::size_t count, std::span<const Point> storage);
  std::optional<std::uint32_t> find(std::span<const Point> images,
                                    std::span<const Point> storage) const;
  /// Inserts `index` whose images live at storage[index * degree]. The key must be absent.
  void insert(std::uint32_t index, std::span<const Point> storage);

 private:
  std::size_t slot_for(std::span<const Point> images) const;
  void rehash(std::size_t capacity, std::span<const Point> storage);

  std::size_t degree_;
  std::size_t size_ = 0;
  std::vector<std::uint32_t> slots_;  // index + 1, zero marks an empty slot
};

/// A finite permutation group with every element enumerated.
///
/// Element 0 is the identity. Elements are stored in breadth-first discovery
/// order from the generator list, which makes indices deterministic. The object is
/// immutable once built and safe to read from several threads.
class PermGroup {
 public:
  using Index = std::uint32_t;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Element indices of the generators (identity generators included as 0).
  const std::vector<Index>& generator_indices() const noexcept { return generator_indices_; }

  std::span<const Point> images(Index i) const {
    return {storage_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation element(Index i) const;

  std::optional<Index> find(std::span<const Point> images) const;
  std::optional<Index> find(const Permutation& p) const { return find(p.images()); }
  /// Like find, but throws NotSubgroup when the permutation is not in the group.
  Index index_of(const Permutation& p) const;

  static constexpr Index identity() noexcept { return 0; }
  /// Index of a * b (a applied first).
  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const noexcept { return inverse_[a]; }
  /// g^-1 * x * g
  Index conjugate(Index x, Index g) const { return multiply(multiply(inverse_[g], x), g); }
  Index commutator(Index a, Index b) const {
    return multiply(multiply(inverse_[a], inverse_[b]), multiply(a, b));
  }
  Index power(Index a, std::int64_t exponent) const;

  std::uint32_t element_order(Index a) const noexcept { return element_order_[a]; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_abelian() const;

  /// Lexicographic comparison of two elements by their image arrays.
  bool lex_less(Index a, Index b) const;

  friend PermGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens,
                                         std::size_t cap);

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Point> storage_;
  ElementIndex index_;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint64_t exponent_ = 1;
};

/// Enumerates the group generated by `gens` on `degree` points by a breadth-first
/// closure. Throws DegreeMismatch when a generator has a different degree and
/// OrderCapExceeded once more than `cap` elements have been found.
PermGroup group_from_generators(std::size_t degree, std::span<const Permutation> gens,
                                std::size_t cap = kDefaultOrderCap);

inline PermGroup group_from_generators(std::size_t degree, std::initializer_list<Permutation> gens,
                                       std::size_t cap = kDefaultOrderCap) {
  return group_from_generators(degree, std::span<const Permutation>(gens.begin(), gens.size()), cap);
}

}  // namespace cgt

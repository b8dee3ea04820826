#pragma once

#include <cstdint>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

/// Conjugacy classes of an enumerated group in canonical order.
///
/// Classes are sorted by (element order, class size, representative), where the
/// representative is the lexicographically smallest member by image array. The
/// identity class is therefore always class 0.
struct ConjugacyData {
  std::vector<PermGroup::Index> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> orders;       // element order of each class
  std::vector<std::uint32_t> class_of;     // element index -> class index
  std::vector<std::vector<PermGroup::Index>> members;
  // power_table[c][j] = class of rep^j for 0 <= j < orders[c]
  std::vector<std::vector<std::uint32_t>> power_table;
  std::uint64_t group_order = 1;
  std::uint64_t exponent = 1;

  std::size_t size() const noexcept { return reps.size(); }
  /// Class of rep(c)^j for any integer j (periodic in the element order).
  std::uint32_t power_map(std::size_t c, std::int64_t j) const;
  std::uint32_t inverse_class(std::size_t c) const { return power_map(c, -1); }
  std::uint64_t centralizer_order(std::size_t c) const { return group_order / sizes[c]; }
};

ConjugacyData conjugacy_classes(const PermGroup& G);

}  // namespace cgt

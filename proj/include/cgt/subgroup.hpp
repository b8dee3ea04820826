#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cgt/conjugacy.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

inline constexpr std::size_t kDefaultLatticeCap = 2000;

/// A subgroup of an enumerated parent group, held as a sorted set of parent
/// element indices plus a generating set. Value type: it carries no pointer to the
/// parent, so every operation takes the parent explicitly.
class Subgroup {
 public:
  using Index = PermGroup::Index;

  Subgroup() = default;
  /// `elements` must be a group; sorts them and records normality in `parent`.
  Subgroup(const PermGroup& parent, std::vector<Index> elements, std::vector<Index> generators);

  static Subgroup trivial(const PermGroup& parent);
  static Subgroup whole(const PermGroup& parent);

  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Index x) const noexcept { return x < mask_.size() && mask_[x]; }
  const std::vector<Index>& elements() const noexcept { return elements_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  bool is_normal() const noexcept { return normal_; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Index> elements_;
  std::vector<Index> generators_;
  std::vector<bool> mask_;
  bool normal_ = false;
};

/// Subgroup generated by `seeds`.
Subgroup subgroup_generated(const PermGroup& G, std::span<const Subgroup::Index> seeds);
/// Smallest subgroup of `within` containing `seeds` and normalised by `within`.
Subgroup normal_closure(const PermGroup& G, const Subgroup& within,
                        std::span<const Subgroup::Index> seeds);
Subgroup normal_closure(const PermGroup& G, std::span<const Subgroup::Index> seeds);
/// Subgroup generated by two subgroups (their product when both are normal).
Subgroup join(const PermGroup& G, const Subgroup& a, const Subgroup& b);
/// [H, H] for a subgroup H of G.
Subgroup derived_subgroup(const PermGroup& G, const Subgroup& H);

/// H, H', H'', ... up to the first term that repeats.
std::vector<Subgroup> derived_series(const PermGroup& G, const Subgroup& H);
std::vector<Subgroup> derived_series(const PermGroup& G);
bool is_solvable(const PermGroup& G, const Subgroup& H);
bool is_solvable(const PermGroup& G);
/// Number of strict steps to the trivial group. Throws NotSolvable.
std::size_t derived_length(const PermGroup& G, const Subgroup& H);
std::size_t derived_length(const PermGroup& G);

/// Every Sylow subgroup of H is normal, tested by counting p-elements.
bool is_nilpotent(const PermGroup& G, const Subgroup& H);

Subgroup fitting_subgroup(const PermGroup& G, const ConjugacyData& classes);
Subgroup solvable_radical(const PermGroup& G, const ConjugacyData& classes);
/// Product of the minimal normal subgroups. Throws NonTrivialRadical.
Subgroup socle_trivial_radical(const PermGroup& G, const ConjugacyData& classes);
/// Centraliser of H in G.
Subgroup centralizer(const PermGroup& G, const Subgroup& H);

/// The normal subgroup lattice sorted by (order, elements). Throws LatticeCapExceeded.
std::vector<Subgroup> normal_subgroups(const PermGroup& G, const ConjugacyData& classes,
                                       std::size_t cap = kDefaultLatticeCap);

/// G/N acting on the cosets of N. Throws NotNormal.
PermGroup quotient_group(const PermGroup& G, const Subgroup& N);

/// Frattini subgroup of a nilpotent H: the product over primes of P' P^p for the
/// Sylow subgroups P. Throws NotNilpotent.
Subgroup frattini_nilpotent(const PermGroup& G, const Subgroup& H);

/// H as a group in its own right, plus the index translation both ways.
struct EmbeddedSubgroup {
  PermGroup group;
  std::vector<PermGroup::Index> to_parent;  // local index -> parent index
  PermGroup::Index to_local(PermGroup::Index parent_index, const PermGroup& parent) const;
};

EmbeddedSubgroup embed(const PermGroup& G, const Subgroup& H, std::size_t cap = kDefaultOrderCap);

}  // namespace cgt

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cgt/character_table.hpp"
#include "cgt/numeric.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

/// A normal subgroup N of an analysed group, with its own table and the fusion of
/// its classes into the parent.
struct NormalSubgroupData {
  Subgroup subgroup;
  EmbeddedSubgroup embedded;
  ConjugacyData classes;
  CharacterTable table;
  std::vector<std::uint32_t> fusion;  // N-class -> G-class

  std::size_t order() const noexcept { return subgroup.order(); }
};

/// Throws NotNormal.
NormalSubgroupData normal_data(const PermGroup& G, const ConjugacyData& classes_G, const Subgroup& N);

struct LinearCharacter {
  std::size_t row = 0;      // row of N's table
  std::uint64_t order = 1;  // multiplicative order o(lambda)
  bool square_free() const;
};

/// The degree-1 rows of N's table (the characters of N/N').
std::vector<LinearCharacter> linear_characters(const NormalSubgroupData& N);

struct CharacterOrbit {
  std::size_t representative = 0;  // smallest row in the orbit
  std::vector<std::size_t> members;
  std::size_t size() const noexcept { return members.size(); }
};

/// Row permutation of Irr(N) induced by g: lambda^g(x) = lambda(g x g^-1).
std::vector<std::size_t> conjugation_action(const PermGroup& G, const NormalSubgroupData& N, PermGroup::Index g);

/// G-orbits on Irr(N) (or only on the linear characters), from the generator action.
std::vector<CharacterOrbit> orbits_on_irr(const PermGroup& G, const NormalSubgroupData& N,
                                          bool linear_only = false);

/// Stabiliser of a row of N's table, from Schreier generators of its orbit.
Subgroup inertia_group(const PermGroup& G, const NormalSubgroupData& N, std::size_t row);

/// Rows of G's table lying over the row eta of N's table.
std::vector<std::size_t> irr_over(const CharacterTable& table_G, const NormalSubgroupData& N, std::size_t eta);
/// Throws EmptyFiber when nothing lies over eta (malformed input).
Rational acd_over(const CharacterTable& table_G, const NormalSubgroupData& N, std::size_t eta);
/// Average over the union of the fibres. Throws EmptySet.
Rational acd_over_set(const CharacterTable& table_G, const NormalSubgroupData& N,
                      std::span<const std::size_t> rows);

/// Rows whose kernel does not contain N.
std::vector<std::size_t> irr_above(const CharacterTable& table_G, const ConjugacyData& classes_G, const Subgroup& N);
/// Average degree over irr_above. Throws TrivialN.
Rational acd_above(const CharacterTable& table_G, const ConjugacyData& classes_G, const Subgroup& N);

/// Some chi in Irr(G) has chi(1) = theta(1) and lies over theta.
bool extends(const CharacterTable& table_G, const NormalSubgroupData& N, std::size_t theta);

/// Exact average of the degrees of the listed rows. Throws EmptySet.
Rational average_degree(const CharacterTable& table, std::span<const std::size_t> rows);

}  // namespace cgt

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/conjugacy.hpp"
#include "cgt/cyclotomic.hpp"
#include "cgt/numeric.hpp"
#include "cgt/perm_group.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

/// Exact ordinary character table. Rows are irreducible characters (row 0 is the
/// trivial character, the rest sorted by degree then value coordinates); columns are
/// the canonical conjugacy classes. The value at class c is stored with conductor
/// equal to the element order of that class.
struct CharacterTable {
  std::uint64_t group_order = 1;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint32_t> class_orders;
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<std::uint32_t>> kernels;
  std::uint64_t prime = 0;  // Dixon prime; 0 for the dual-group construction

  std::size_t size() const noexcept { return values.size(); }
  const Cyclotomic& operator()(std::size_t row, std::size_t cls) const { return values[row][cls]; }
};

enum class TableMethod { Auto, Dixon, DualGroup };

/// Dixon-Schneider: common eigenvectors of the class matrices over F_p, lifted to
/// cyclotomic values through the power maps. Abelian groups take the dual-group
/// construction under TableMethod::Auto. The result is verified before it is
/// returned (VerificationFailed otherwise).
CharacterTable character_table(const PermGroup& G, const ConjugacyData& classes,
                               TableMethod method = TableMethod::Auto);

/// Smallest prime p = 1 mod exponent with p^2 > 4|G| and p > every class size.
std::uint64_t dixon_prime(const ConjugacyData& classes);

/// Checks degrees, Galois compatibility with the power maps and exact row
/// orthogonality. Throws VerificationFailed.
void verify_character_table(const CharacterTable& table, const ConjugacyData& classes);

std::uint64_t b_of(const CharacterTable& table);

/// Classes on which the character takes the value chi(1).
std::vector<std::uint32_t> kernel(const CharacterTable& table, std::size_t row);

/// Number of degree-1 rows.
std::size_t linear_count(const CharacterTable& table);

/// Class fusion of an embedded subgroup: local class -> parent class.
std::vector<std::uint32_t> class_fusion(const PermGroup& G, const ConjugacyData& classes_G,
                                        const EmbeddedSubgroup& H, const ConjugacyData& classes_H);

/// <chi_H, eta> = (1/|H|) sum_{x in H} chi(x) conj(eta(x)) for chi a row of G's table and
/// eta a row of H's table. Exact; a nonnegative integer for genuine characters.
Rational restriction_inner_product(const CharacterTable& table_G, std::size_t chi,
                                   const CharacterTable& table_H, std::size_t eta,
                                   const std::vector<std::uint32_t>& fusion,
                                   const ConjugacyData& classes_H);

/// Plain-text export: class metadata, degrees and each value as conductor:coords.
std::string export_table(const PermGroup& G, const ConjugacyData& classes, const CharacterTable& table);

/// A group together with its classes and verified table.
struct AnalyzedGroup {
  PermGroup group;
  ConjugacyData classes;
  CharacterTable table;
};

AnalyzedGroup analyze(PermGroup G, TableMethod method = TableMethod::Auto);

}  // namespace cgt

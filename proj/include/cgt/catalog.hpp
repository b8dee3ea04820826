#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/perm_group.hpp"
#include "cgt/socle_transform.hpp"

namespace cgt {

PermGroup symmetric(std::size_t n, std::size_t cap = kDefaultOrderCap);
PermGroup alternating(std::size_t n, std::size_t cap = kDefaultOrderCap);
PermGroup cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap);
/// Order 2n: the symmetries of an n-gon for n >= 3, the Klein four group for n = 2.
PermGroup dihedral(std::size_t n, std::size_t cap = kDefaultOrderCap);
/// x -> ax + b over F_p, order p(p-1). Throws NotPrime unless p is an odd prime.
PermGroup frobenius_agl1(std::uint64_t p, std::size_t cap = kDefaultOrderCap);
/// C_p : C_q acting on p points, for primes p and q with q | p - 1. Throws NotPrime / ConfigError.
PermGroup frobenius_pq(std::uint64_t p, std::uint64_t q, std::size_t cap = kDefaultOrderCap);
/// The quaternion group of order 8 in its regular representation.
PermGroup quaternion(std::size_t cap = kDefaultOrderCap);
/// (C_p)^d on p*d points.
PermGroup elementary_abelian(std::uint64_t p, std::size_t d, std::size_t cap = kDefaultOrderCap);

/// Acts on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& G, const PermGroup& H, std::size_t cap = kDefaultOrderCap);
/// G wr S_n acting imprimitively on degree(G) * n points.
PermGroup wreath_imprimitive(const PermGroup& G, std::size_t n, std::size_t cap = kDefaultOrderCap);

/// Group file:
///   degree: n
///   <n images of generator 1>
///   <n images of generator 2>
/// Blank lines and '#' comments are ignored. Throws ParseError.
PermGroup parse_group(std::string_view text, std::size_t cap = kDefaultOrderCap);
PermGroup load_group(const std::filesystem::path& path, std::size_t cap = kDefaultOrderCap);

std::vector<SimpleGroupData> load_simple_data(const std::filesystem::path& path);

/// Builds a group from a nested spec such as "direct(symmetric(3),frobenius(5))",
/// "wreath(symmetric(4),3)" or "file(groups/a5.grp)". Families: symmetric, alternating,
/// cyclic, dihedral, frobenius, frobenius_pq, quaternion, elementary, direct, wreath, file.
/// Relative file paths resolve against base_dir. Throws ConfigError on bad specs.
PermGroup group_from_spec(std::string_view spec, std::size_t cap = kDefaultOrderCap,
                          const std::filesystem::path& base_dir = {});

struct CatalogEntry {
  std::string name;
  std::string spec;
  std::optional<std::uint64_t> expected_order;
};

/// One entry per line: `<name> <spec> [expected_order]`; '#' starts a comment.
std::vector<CatalogEntry> parse_manifest(std::string_view text);
std::vector<CatalogEntry> load_manifest(const std::filesystem::path& path);

/// Builds the entry's group and checks the expected order (ValidationFailed).
PermGroup build_entry(const CatalogEntry& entry, std::size_t cap = kDefaultOrderCap,
                      const std::filesystem::path& base_dir = {});

std::string read_text_file(const std::filesystem::path& path);

}  // namespace cgt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/numeric.hpp"

namespace cgt {

inline constexpr std::uint64_t kDefaultTupleCap = 1'000'000;

/// Character degree data of a nonabelian simple group S.
struct SimpleGroupData {
  std::string name;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> degrees;  // index 0 is the principal character
  std::size_t alpha_index = 0;         // a nonprincipal character fixed by Aut(S)
  std::vector<std::vector<std::size_t>> aut_generators;  // permutations of character indices

  /// Smallest nonlinear degree m(S).
  std::uint64_t m() const;
  /// Throws ValidationFailed.
  void validate() const;
};

/// Parses records of the form
///   name: A5 / order: 60 / degrees: 1 3 3 4 5 / alpha_index: 4 / aut: 0 2 1 3 4
/// (one field per line, any number of aut lines, records separated by a new name line).
/// Throws ParseError or ValidationFailed.
std::vector<SimpleGroupData> parse_simple_data(std::string_view text);

/// A5, A6 and PSL(2,7).
const std::vector<SimpleGroupData>& builtin_simple_data();

struct SocleComponent {
  SimpleGroupData group;
  std::size_t copies = 1;  // u_i
};
using SocleShape = std::vector<SocleComponent>;

/// "A5^2*A6" style shape against a data pack. Throws ConfigError.
SocleShape parse_shape(std::string_view spec, const std::vector<SimpleGroupData>& pack);
std::string shape_string(const SocleShape& shape);

/// Per component, u_i character indices: theta = product of the factor characters.
using FactorTuple = std::vector<std::vector<std::size_t>>;

BigInt theta_degree(const SocleShape& shape, const FactorTuple& theta);

/// coeff * sqrt(radicand) with radicand square-free.
struct SqrtBound {
  BigInt coeff = 1;
  BigInt radicand = 1;

  BigInt square() const { return coeff * coeff * radicand; }
  /// x >= this bound, for x >= 0.
  bool le(const Rational& x) const;
  std::string str() const;
};

/// prod_i m(S_i)^{u_i / 2}.
SqrtBound min_degree_bound(const SocleShape& shape);

std::size_t principal_count(const FactorTuple& theta, std::size_t component);
/// Some component has more than u_i/2 principal factors.
bool has_principal_majority(const SocleShape& shape, const FactorTuple& theta);

/// In every component with a principal majority, swap principal and alpha factors.
/// nullopt when no component has a principal majority.
std::optional<FactorTuple> theta_prime(const SocleShape& shape, const FactorTuple& theta);

/// Per component, the copy positions grouped by equal factor index, blocks ordered by index.
std::vector<std::vector<std::vector<std::size_t>>> decomposition_partition(const SocleShape& shape,
                                                                           const FactorTuple& theta);

/// The modelled action: per component, permutations of the copies (the top group)
/// together with Aut(S_i) acting on one copy at a time.
struct ModelAction {
  std::vector<std::vector<std::vector<std::size_t>>> top_generators;  // per component
  bool include_aut = true;

  /// Full symmetric top group on each component.
  static ModelAction full(const SocleShape& shape);
  static ModelAction trivial_top(const SocleShape& shape);
};

/// Tuple <-> code in mixed radix over all positions.
std::uint64_t tuple_count(const SocleShape& shape);
std::uint64_t encode(const SocleShape& shape, const FactorTuple& theta);
FactorTuple decode(const SocleShape& shape, std::uint64_t code);

struct ModelGenerator {
  std::size_t component = 0;
  bool is_top = false;
  std::size_t copy = 0;  // the copy an automorphism generator acts on
  std::vector<std::size_t> perm;  // copies for a top generator, character indices otherwise
};
std::vector<ModelGenerator> model_generators(const SocleShape& shape, const ModelAction& action);
/// theta^g for a generator of the modelled action.
FactorTuple apply(const FactorTuple& theta, const ModelGenerator& g);

struct ModelOrbits {
  std::vector<std::uint32_t> orbit_of;  // tuple code -> orbit id (ids ordered by smallest code)
  std::vector<std::uint64_t> representative;
  std::vector<std::uint64_t> size;
  std::size_t count() const noexcept { return representative.size(); }
};

/// Throws TupleCapExceeded when the tuple count passes `cap`.
ModelOrbits model_orbits(const SocleShape& shape, const ModelAction& action,
                         std::uint64_t cap = kDefaultTupleCap);

struct CheckLine {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

struct DeltaBlock {
  std::uint64_t theta = 0;  // tuple code of the representative
  std::optional<std::uint64_t> theta_prime;
  BigInt degree_sum = 0;    // theta(1) (+ theta'(1))
  std::uint64_t members = 1;
  Rational average() const { return Rational(degree_sum, BigInt(members)); }
};

struct DeltaSystem {
  std::vector<DeltaBlock> blocks;  // paired blocks first, then the unpaired tail
  std::size_t paired = 0;
  bool perfect_matching = true;
  Rational block_minimum = 0;
  SqrtBound bound;
  bool aggregate_pass = true;  // every block average >= bound / 2
};

DeltaSystem delta_system(const SocleShape& shape, const ModelAction& action, const ModelOrbits& orbits);

struct SocleSimReport {
  std::string shape;
  std::uint64_t tuples = 0;
  std::uint64_t defined = 0;
  std::size_t orbits = 0;
  SqrtBound bound;
  DeltaSystem delta;
  std::vector<CheckLine> checks;
  bool all_pass() const;
};

/// Exhaustive verification of every model invariant over all tuples.
SocleSimReport simulate_socle(const SocleShape& shape, const ModelAction& action,
                              std::uint64_t cap = kDefaultTupleCap);

}  // namespace cgt

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgt/character_table.hpp"
#include "cgt/clifford.hpp"
#include "cgt/numeric.hpp"

namespace cgt {

Rational acd(const CharacterTable& table);
Rational acs(const ConjugacyData& classes);
Rational commuting_probability(const ConjugacyData& classes);

/// An exponent for the Fitting-index predicates: a rational p/q or the large-orbit alpha.
struct BoundExponent {
  bool large_orbit_alpha = false;
  RationalExponent rational{2, 1};

  static BoundExponent alpha() { return {true, {}}; }
  static BoundExponent of(RationalExponent e) { return {false, e}; }
  /// "alpha" or a rational/decimal. Throws ConfigError.
  static BoundExponent parse(const std::string& text);
  std::string str() const;
};

/// x <= y^e, exactly.
Verdict leq_power(const BigInt& x, const Rational& y, const BoundExponent& e);

/// Fibre data for one G-orbit of linear characters of F(G).
struct FiberSummary {
  std::size_t row = 0;            // orbit representative in the table of F(G)
  std::uint64_t order = 1;        // o(lambda)
  bool square_free = true;
  std::uint64_t orbit_size = 1;   // |G : I_G(lambda)|
  std::size_t count = 0;          // |Irr(G|lambda)|
  Rational acd = 0;               // acd(G|lambda)
};

/// Everything the predicates need, computed once per group.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(AnalyzedGroup group);

  const PermGroup& group() const noexcept { return g_.group; }
  const ConjugacyData& classes() const noexcept { return g_.classes; }
  const CharacterTable& table() const noexcept { return g_.table; }
  std::uint64_t order() const noexcept { return g_.group.order(); }

  bool solvable() const;
  const Subgroup& fitting() const;
  const Subgroup& radical() const;
  const Subgroup& derived() const;
  std::uint64_t fitting_index() const { return order() / fitting().order(); }
  std::uint64_t radical_index() const { return order() / radical().order(); }
  std::optional<std::size_t> derived_length() const;
  const NormalSubgroupData& fitting_data() const;
  /// One entry per G-orbit on the linear characters of F(G).
  const std::vector<FiberSummary>& fibers() const;

 private:
  AnalyzedGroup g_;
  mutable std::optional<bool> solvable_;
  mutable std::optional<Subgroup> fitting_, radical_, derived_;
  mutable std::unique_ptr<NormalSubgroupData> fitting_data_;
  mutable std::optional<std::vector<FiberSummary>> fibers_;
};

enum class CheckStatus { Pass, Fail, Indeterminate, Skipped, Info };
std::string to_string(CheckStatus s);

/// Outcome of one predicate on one group. `values` holds the exact numbers involved,
/// keyed by name, as strings (integers and reduced fractions).
struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string name, CheckStatus s, std::string why = {})
      : check(std::move(name)), status(s), detail(std::move(why)) {}

  std::string check;
  CheckStatus status = CheckStatus::Info;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> values;
  /// Informational checks never count as violations.
  bool informational = false;

  bool violation() const { return !informational && (status == CheckStatus::Fail || status == CheckStatus::Indeterminate); }
};

struct ConjectureOptions {
  BoundExponent exponent;
  bool square_free_only = false;
};

/// |G:F(G)| <= b(G)^2. Throws NotSolvable.
CheckResult check_gluck(const GroupAnalysis& G);
/// Some linear lambda of F(G) has |G:F(G)| <= acd(G|lambda)^e. Throws NotSolvable unless
/// `require_solvable` is false.
CheckResult check_conjC(const GroupAnalysis& G, const ConjectureOptions& options, const std::string& name = "conjC",
                        bool require_solvable = true);

struct QuotientComparison {
  std::vector<std::uint32_t> normal_subgroup;  // sorted element indices
  std::uint64_t normal_order = 1;
  Rational acd_quotient = 0;
  bool exceeds = false;  // acd(G/N) > acd(G)
};

/// acd(G/N) against acd(G) for every proper normal N. Throws LatticeCapExceeded.
std::vector<QuotientComparison> quotient_comparisons(const GroupAnalysis& G,
                                                     std::size_t lattice_cap = kDefaultLatticeCap);
CheckResult check_q51(const GroupAnalysis& G, std::size_t lattice_cap = kDefaultLatticeCap);
/// |G:sol(G)| <= acd(G)^e (e = 4 for the question, 3 for the refuted variant).
CheckResult check_q52(const GroupAnalysis& G, RationalExponent e = {4, 1});
CheckResult check_q53(const GroupAnalysis& G);
/// (derived length, acd); informational. Throws NotSolvable.
CheckResult check_q54(const GroupAnalysis& G);
/// |G:sol(G)| <= acs(G)^2 and |G:F(G)| <= acs(G)^2.
CheckResult check_gr_bounds(const GroupAnalysis& G);
/// Largest G-orbit on the linear characters of F(G), against |G:F(G)| <= size^alpha.
/// Throws NotSolvable.
CheckResult check_orbit_bound(const GroupAnalysis& G);
/// (acd, |G|) for groups with trivial solvable radical; informational.
CheckResult check_thmA(const GroupAnalysis& G);

/// Check names accepted by run_check, in canonical order.
const std::vector<std::string>& check_names();
bool is_informational_check(const std::string& name);

/// Default exponents: conjC 2, thmB alpha, oddorder 1.643, q53 4.
BoundExponent default_exponent(const std::string& check);

struct CheckSettings {
  std::map<std::string, BoundExponent> exponents;  // per-check overrides of default_exponent
  bool square_free_only = false;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::uint64_t q51_max_order = 2000;
};

/// Runs a named check, turning gating conditions (solvability, odd order, size) into
/// Skipped results. Throws ConfigError for an unknown name.
CheckResult run_check(const GroupAnalysis& G, const std::string& name, const CheckSettings& settings);

struct GroupReport {
  std::string name;
  std::string spec;
  std::uint64_t order = 1;
  std::size_t k = 0;
  Rational acd = 0, acs = 0;
  std::uint64_t b = 1;
  std::uint64_t fitting_index = 1, radical_index = 1;
  bool solvable = true;
  std::optional<std::size_t> derived_length;
  std::vector<std::uint64_t> degrees;
  std::vector<FiberSummary> fibers;
  std::vector<CheckResult> checks;
  std::optional<std::string> error;  // per-entry failure, the run continues
  std::optional<std::string> error_code;
  double seconds = 0;

  bool violation() const;
};

GroupReport make_report(const std::string& name, const std::string& spec, const GroupAnalysis& G,
                        const std::vector<std::string>& checks, const CheckSettings& settings);

}  // namespace cgt

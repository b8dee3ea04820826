#include "cgt/metrics.hpp"

#include <algorithm>

#include "cgt/error.hpp"

namespace cgt {

namespace {

std::string str(const Rational& r) { return to_string(r); }
std::string str(const BigInt& v) { return to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }

CheckStatus status_of(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return CheckStatus::Pass;
    case Verdict::Fail:
      return CheckStatus::Fail;
    case Verdict::Indeterminate:
      break;
  }
  return CheckStatus::Indeterminate;
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

void require_solvable(const GroupAnalysis& G) {
  if (!G.solvable()) throw Error(Errc::NotSolvable, "group is not solvable");
}

Rational rational_power(const Rational& y, std::uint64_t e) {
  return Rational(pow(boost::multiprecision::numerator(y), e), pow(boost::multiprecision::denominator(y), e));
}

}  // namespace

Rational acd(const CharacterTable& table) {
  std::vector<std::size_t> rows(table.size());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  return average_degree(table, rows);
}

Rational acs(const ConjugacyData& classes) { return Rational(BigInt(classes.group_order), BigInt(classes.size())); }

Rational commuting_probability(const ConjugacyData& classes) {
  return Rational(BigInt(classes.size()), BigInt(classes.group_order));
}

BoundExponent BoundExponent::parse(const std::string& text) {
  if (text == "alpha") return alpha();
  return of(RationalExponent::parse(text));
}

std::string BoundExponent::str() const { return large_orbit_alpha ? "alpha" : rational.str(); }

BoundExponent default_exponent(const std::string& check) {
  if (check == "thmB") return BoundExponent::alpha();
  if (check == "oddorder") return BoundExponent::of({1643, 1000});
  if (check == "q53") return BoundExponent::of({4, 1});
  return BoundExponent::of({2, 1});
}

Verdict leq_power(const BigInt& x, const Rational& y, const BoundExponent& e) {
  if (e.large_orbit_alpha) return leq_power_large_orbit_alpha(x, y);
  return leq_rational_power(x, y, e.rational) ? Verdict::Pass : Verdict::Fail;
}

GroupAnalysis::GroupAnalysis(AnalyzedGroup group) : g_(std::move(group)) {}

bool GroupAnalysis::solvable() const {
  if (!solvable_) solvable_ = radical().order() == order();
  return *solvable_;
}

const Subgroup& GroupAnalysis::fitting() const {
  if (!fitting_) fitting_ = fitting_subgroup(g_.group, g_.classes);
  return *fitting_;
}

const Subgroup& GroupAnalysis::radical() const {
  if (!radical_) radical_ = solvable_radical(g_.group, g_.classes);
  return *radical_;
}

const Subgroup& GroupAnalysis::derived() const {
  if (!derived_) derived_ = derived_subgroup(g_.group, Subgroup::whole(g_.group));
  return *derived_;
}

std::optional<std::size_t> GroupAnalysis::derived_length() const {
  if (!solvable()) return std::nullopt;
  return cgt::derived_length(g_.group);
}

const NormalSubgroupData& GroupAnalysis::fitting_data() const {
  if (!fitting_data_)
    fitting_data_ = std::make_unique<NormalSubgroupData>(normal_data(g_.group, g_.classes, fitting()));
  return *fitting_data_;
}

const std::vector<FiberSummary>& GroupAnalysis::fibers() const {
  if (!fibers_) {
    const auto& F = fitting_data();
    const auto linear = linear_characters(F);
    std::vector<FiberSummary> out;
    for (const auto& orbit : orbits_on_irr(g_.group, F, true)) {
      FiberSummary s;
      s.row = orbit.representative;
      auto it = std::find_if(linear.begin(), linear.end(), [&](const LinearCharacter& l) { return l.row == s.row; });
      s.order = it->order;
      s.square_free = it->square_free();
      s.orbit_size = orbit.size();
      const auto rows = irr_over(g_.table, F, s.row);
      s.count = rows.size();
      s.acd = average_degree(g_.table, rows);
      out.push_back(std::move(s));
    }
    fibers_ = std::move(out);
  }
  return *fibers_;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Indeterminate:
      return "indeterminate";
    case CheckStatus::Skipped:
      return "skipped";
    case CheckStatus::Info:
      break;
  }
  return "info";
}

CheckResult check_gluck(const GroupAnalysis& G) {
  require_solvable(G);
  const std::uint64_t index = G.fitting_index();
  const std::uint64_t b = b_of(G.table());
  CheckResult r{"gluck", status_of(BigInt(index) <= BigInt(b) * b)};
  r.detail = "|G:F(G)| <= b(G)^2";
  r.values = {{"fitting_index", str(index)}, {"b", str(b)}, {"b_squared", str(BigInt(b) * b)}};
  return r;
}

CheckResult check_conjC(const GroupAnalysis& G, const ConjectureOptions& options, const std::string& name,
                        bool require) {
  if (require) require_solvable(G);
  const BigInt index = G.fitting_index();
  CheckResult r{name, CheckStatus::Fail};
  r.detail = "exists lambda: |G:F(G)| <= acd(G|lambda)^" + options.exponent.str() +
             (options.square_free_only ? " (square-free o(lambda))" : "");
  const FiberSummary* best = nullptr;
  bool indeterminate = false;
  std::size_t considered = 0;
  for (const auto& f : G.fibers()) {
    if (options.square_free_only && !f.square_free) continue;
    ++considered;
    if (best == nullptr || f.acd > best->acd) best = &f;
    const Verdict v = leq_power(index, f.acd, options.exponent);
    if (v == Verdict::Pass) r.status = CheckStatus::Pass;
    if (v == Verdict::Indeterminate) indeterminate = true;
  }
  if (r.status != CheckStatus::Pass && indeterminate) r.status = CheckStatus::Indeterminate;
  r.values = {{"fitting_index", str(index)}, {"exponent", options.exponent.str()},
              {"orbits_considered", str(static_cast<std::uint64_t>(considered))}};
  if (best != nullptr) {
    r.values.emplace_back("witness_row", str(static_cast<std::uint64_t>(best->row)));
    r.values.emplace_back("witness_order", str(best->order));
    r.values.emplace_back("witness_orbit_size", str(best->orbit_size));
    r.values.emplace_back("witness_acd", str(best->acd));
  }
  return r;
}

std::vector<QuotientComparison> quotient_comparisons(const GroupAnalysis& G, std::size_t lattice_cap) {
  const Rational whole = acd(G.table());
  std::vector<QuotientComparison> out;
  for (const auto& N : normal_subgroups(G.group(), G.classes(), lattice_cap)) {
    if (N.order() == G.order()) continue;
    // Irr(G/N) is the set of rows whose kernel contains N.
    const auto above = irr_above(G.table(), G.classes(), N);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < G.table().size(); ++i)
      if (!std::binary_search(above.begin(), above.end(), i)) rows.push_back(i);
    QuotientComparison q;
    q.normal_subgroup = N.elements();
    q.normal_order = N.order();
    q.acd_quotient = average_degree(G.table(), rows);
    q.exceeds = q.acd_quotient > whole;
    out.push_back(std::move(q));
  }
  return out;
}

CheckResult check_q51(const GroupAnalysis& G, std::size_t lattice_cap) {
  const auto comparisons = quotient_comparisons(G, lattice_cap);
  CheckResult r{"q51", CheckStatus::Info};
  r.informational = true;
  r.detail = "acd(G/N) <= acd(G) over proper normal N";
  std::uint64_t exceed = 0;
  Rational max_quotient = 0;
  for (const auto& q : comparisons) {
    if (q.exceeds) ++exceed;
    max_quotient = std::max(max_quotient, q.acd_quotient);
  }
  r.values = {{"acd", str(acd(G.table()))},
              {"normal_subgroups", str(static_cast<std::uint64_t>(comparisons.size()))},
              {"max_acd_quotient", str(max_quotient)},
              {"exceeding", str(exceed)}};
  return r;
}

CheckResult check_q52(const GroupAnalysis& G, RationalExponent e) {
  const std::uint64_t index = G.radical_index();
  const Rational a = acd(G.table());
  const bool ok = leq_rational_power(index, a, e);
  CheckResult r{e.num == 4 && e.den == 1 ? "q52" : "q52_exp" + e.str(), status_of(ok)};
  r.detail = "|G:sol(G)| <= acd(G)^" + e.str();
  r.values = {{"radical_index", str(index)}, {"acd", str(a)}};
  if (e.den == 1) r.values.emplace_back("acd_power", str(rational_power(a, e.num)));
  return r;
}

CheckResult check_q53(const GroupAnalysis& G) {
  return check_conjC(G, {BoundExponent::of({4, 1}), false}, "q53", false);
}

CheckResult check_q54(const GroupAnalysis& G) {
  require_solvable(G);
  CheckResult r{"q54", CheckStatus::Info};
  r.informational = true;
  r.detail = "derived length against acd(G)";
  r.values = {{"derived_length", str(static_cast<std::uint64_t>(*G.derived_length()))}, {"acd", str(acd(G.table()))}};
  return r;
}

CheckResult check_gr_bounds(const GroupAnalysis& G) {
  const Rational s = acs(G.classes());
  const Rational s2 = s * s;
  const bool sol_ok = Rational(G.radical_index()) <= s2;
  const bool fit_ok = Rational(G.fitting_index()) <= s2;
  CheckResult r{"gr", status_of(sol_ok && fit_ok)};
  r.detail = "|G:sol(G)| <= acs(G)^2 and |G:F(G)| <= acs(G)^2";
  r.values = {{"radical_index", str(G.radical_index())},
              {"fitting_index", str(G.fitting_index())},
              {"acs", str(s)},
              {"acs_squared", str(s2)},
              {"radical_bound", sol_ok ? "pass" : "fail"},
              {"fitting_bound", fit_ok ? "pass" : "fail"}};
  return r;
}

CheckResult check_orbit_bound(const GroupAnalysis& G) {
  require_solvable(G);
  std::uint64_t largest = 1;
  for (const auto& f : G.fibers()) largest = std::max(largest, f.orbit_size);
  const BigInt index = G.fitting_index();
  CheckResult r{"orbit", status_of(leq_power_large_orbit_alpha(index, Rational(largest)))};
  r.detail = "|G:F(G)| <= (largest orbit on linear characters of F(G))^alpha";
  r.values = {{"fitting_index", str(index)}, {"largest_orbit", str(largest)}};
  return r;
}

CheckResult check_thmA(const GroupAnalysis& G) {
  CheckResult r{"thmA", CheckStatus::Info};
  r.informational = true;
  r.detail = "(acd, |G|) for trivial solvable radical";
  r.values = {{"acd", str(acd(G.table()))}, {"order", str(G.order())}};
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"gluck", "conjC", "thmB", "oddorder", "orbit", "gr",
                                                 "q51",   "q52",   "q52cube", "q53",   "q54",   "thmA"};
  return names;
}

bool is_informational_check(const std::string& name) {
  return name == "q51" || name == "q52cube" || name == "q54" || name == "thmA";
}

CheckResult run_check(const GroupAnalysis& G, const std::string& name, const CheckSettings& settings) {
  auto skipped = [&](const std::string& why) {
    CheckResult r{name, CheckStatus::Skipped, why};
    r.informational = is_informational_check(name);
    return r;
  };
  auto exponent = [&] {
    auto it = settings.exponents.find(name);
    return it == settings.exponents.end() ? default_exponent(name) : it->second;
  };
  const bool needs_solvable =
      name == "gluck" || name == "conjC" || name == "thmB" || name == "orbit" || name == "q54";
  if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
    throw Error(Errc::ConfigError, "unknown check '" + name + "'");
  if (needs_solvable && !G.solvable()) return skipped("not solvable");
  if (name == "gluck") return check_gluck(G);
  if (name == "conjC" || name == "thmB") return check_conjC(G, {exponent(), settings.square_free_only}, name);
  if (name == "oddorder") {
    if (G.order() % 2 == 0) return skipped("even order");
    return check_conjC(G, {exponent(), settings.square_free_only}, name);
  }
  if (name == "orbit") return check_orbit_bound(G);
  if (name == "gr") return check_gr_bounds(G);
  if (name == "q51") {
    if (G.order() > settings.q51_max_order) return skipped("order above " + std::to_string(settings.q51_max_order));
    return check_q51(G, settings.lattice_cap);
  }
  if (name == "q52") return check_q52(G, {4, 1});
  if (name == "q52cube") {
    CheckResult r = check_q52(G, {3, 1});
    r.check = "q52cube";
    r.informational = true;
    return r;
  }
  if (name == "q53") {
    const BoundExponent e = exponent();
    return check_conjC(G, {e, settings.square_free_only}, "q53", false);
  }
  if (name == "q54") return check_q54(G);
  if (G.radical_index() == G.order() && G.order() > 1) return check_thmA(G);
  return skipped("solvable radical is nontrivial");
}

bool GroupReport::violation() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.violation(); });
}

GroupReport make_report(const std::string& name, const std::string& spec, const GroupAnalysis& G,
                        const std::vector<std::string>& checks, const CheckSettings& settings) {
  GroupReport r;
  r.name = name;
  r.spec = spec;
  r.order = G.order();
  r.k = G.classes().size();
  r.acd = acd(G.table());
  r.acs = acs(G.classes());
  r.b = b_of(G.table());
  r.fitting_index = G.fitting_index();
  r.radical_index = G.radical_index();
  r.solvable = G.solvable();
  r.derived_length = G.derived_length();
  r.degrees = G.table().degrees;
  r.fibers = G.fibers();
  for (const auto& c : checks) r.checks.push_back(run_check(G, c, settings));
  return r;
}

}  // namespace cgt

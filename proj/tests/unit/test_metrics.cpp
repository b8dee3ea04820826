#include "doctest.h"

#include "cgt/catalog.hpp"
#include "cgt/error.hpp"
#include "cgt/metrics.hpp"

using namespace cgt;

namespace {

GroupAnalysis analysis(PermGroup G) { return GroupAnalysis(analyze(std::move(G))); }

// Commuting pairs counted element by element.
Rational commuting_oracle(const PermGroup& G) {
  std::uint64_t pairs = 0;
  for (PermGroup::Index a = 0; a < G.order(); ++a)
    for (PermGroup::Index b = 0; b < G.order(); ++b)
      if (G.multiply(a, b) == G.multiply(b, a)) ++pairs;
  return Rational(BigInt(pairs), BigInt(G.order()) * G.order());
}

std::string value(const CheckResult& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return v;
  return {};
}

}  // namespace

TEST_CASE("average degree and class size") {
  const auto A5 = analyze(alternating(5));
  CHECK(acd(A5.table) == Rational(16, 5));
  CHECK(acs(A5.classes) == 12);
  const auto S3 = analyze(symmetric(3));
  CHECK(acd(S3.table) == Rational(4, 3));
  CHECK(acs(S3.classes) == 2);
  const auto C6 = analyze(cyclic(6));
  CHECK(acd(C6.table) == 1);
  CHECK(acs(C6.classes) == 1);
  for (auto G : {symmetric(4), frobenius_agl1(13), quaternion()}) {
    const auto cl = conjugacy_classes(G);
    CHECK(commuting_probability(cl) == commuting_oracle(G));
    CHECK(acs(cl) * commuting_probability(cl) == 1);
  }
}

TEST_CASE("exponents") {
  CHECK(BoundExponent::parse("alpha").large_orbit_alpha);
  CHECK(BoundExponent::parse("1.643").str() == "1643/1000");
  CHECK(BoundExponent::parse("2").str() == "2");
  CHECK_THROWS_AS(BoundExponent::parse("-1"), Error);
  CHECK(default_exponent("oddorder").str() == "1643/1000");
  CHECK(default_exponent("thmB").large_orbit_alpha);
  CHECK(leq_power(1296, 54, BoundExponent::of({2, 1})) == Verdict::Pass);
  CHECK(leq_power(1296, 27, BoundExponent::alpha()) == Verdict::Pass);
  CHECK(leq_power(5300, 27, BoundExponent::alpha()) == Verdict::Fail);
  // 3^1.643 is about 6.08
  CHECK(leq_power(6, 3, BoundExponent::of({1643, 1000})) == Verdict::Pass);
  CHECK(leq_power(7, 3, BoundExponent::of({1643, 1000})) == Verdict::Fail);
  const auto [lo, hi] = large_orbit_alpha_bracket(large_orbit_alpha_levels() - 1);
  // alpha = log(6 * 24^(1/3)) / log 3 = 2.59519...
  CHECK(static_cast<double>(lo.num) / lo.den < 2.59520);
  CHECK(static_cast<double>(hi.num) / hi.den > 2.59518);
  CHECK(static_cast<double>(hi.num) / hi.den < 2.596);
}

TEST_CASE("Fitting-index predicates") {
  const auto S4 = analysis(symmetric(4));
  const auto g = check_gluck(S4);
  CHECK(g.status == CheckStatus::Pass);
  CHECK(value(g, "fitting_index") == "6");
  CHECK(value(g, "b") == "3");

  const auto D8 = analysis(dihedral(4));
  CHECK(D8.fitting_index() == 1);
  CHECK(check_conjC(D8, {}).status == CheckStatus::Pass);

  const auto C73 = analysis(frobenius_pq(7, 3));
  const auto odd = check_conjC(C73, {BoundExponent::of({1643, 1000})}, "oddorder");
  CHECK(odd.status == CheckStatus::Pass);
  CHECK(value(odd, "fitting_index") == "3");
  CHECK(value(odd, "witness_acd") == "3");

  const auto A5 = analysis(alternating(5));
  CHECK_THROWS_AS(check_gluck(A5), Error);
  CHECK(run_check(A5, "gluck", {}).status == CheckStatus::Skipped);
  CHECK(run_check(S4, "oddorder", {}).status == CheckStatus::Skipped);
  CHECK(run_check(C73, "oddorder", {}).status == CheckStatus::Pass);
  CHECK_THROWS_AS(run_check(S4, "nope", {}), Error);

  // the odd-order exponent fails somewhere conjC passes: F13 has index 12 and acd(G|mu) = 12
  const auto F13 = analysis(frobenius_agl1(13));
  CHECK(check_conjC(F13, {BoundExponent::of({1, 1})}).status == CheckStatus::Pass);
  CHECK(F13.fitting_index() == 12);
}

TEST_CASE("orbit bound") {
  const auto G = analysis(direct_product(symmetric(3), frobenius_agl1(5)));
  const auto r = check_orbit_bound(G);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(value(r, "largest_orbit") == "8");
  CHECK(check_orbit_bound(analysis(quaternion())).status == CheckStatus::Pass);
}

TEST_CASE("questions on simple and small groups") {
  const auto A5 = analysis(alternating(5));
  CHECK(check_q52(A5, {4, 1}).status == CheckStatus::Pass);
  CHECK(check_q52(A5, {3, 1}).status == CheckStatus::Fail);
  const auto q51 = quotient_comparisons(A5);
  REQUIRE(q51.size() == 1);
  CHECK(q51[0].acd_quotient == acd(A5.table()));

  const auto S4 = analysis(symmetric(4));
  const auto cmp = quotient_comparisons(S4);
  REQUIRE(cmp.size() == 3);
  CHECK(cmp[0].normal_order == 1);
  CHECK(cmp[1].acd_quotient == Rational(4, 3));  // S4/V = S3
  CHECK(cmp[2].acd_quotient == 1);               // S4/A4 = C2
  CHECK(check_q51(S4).informational);

  const auto trivial = analysis(cyclic(1));
  const auto q54 = check_q54(trivial);
  CHECK(value(q54, "derived_length") == "0");
  CHECK(value(q54, "acd") == "1");

  CHECK(check_thmA(A5).informational);
  CHECK(check_q53(S4).status == CheckStatus::Pass);
}

TEST_CASE("acs bounds") {
  const auto A5 = analysis(alternating(5));
  const auto r = check_gr_bounds(A5);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(value(r, "acs_squared") == "144");
  const auto F13 = analysis(frobenius_agl1(13));
  // k(F13) = 13 by the class-count oracle, so acs = 156/13 = 12
  CHECK(acs(F13.classes()) == Rational(156, F13.classes().size()));
  CHECK(check_gr_bounds(F13).status == CheckStatus::Pass);
}

TEST_CASE("group reports") {
  const auto S4 = analysis(symmetric(4));
  const auto rep = make_report("S4", "symmetric(4)", S4, check_names(), {});
  CHECK(rep.order == 24);
  CHECK(rep.k == 5);
  CHECK(rep.b == 3);
  CHECK(rep.checks.size() == check_names().size());
  CHECK_FALSE(rep.violation());
}

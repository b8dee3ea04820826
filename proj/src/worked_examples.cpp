#include "cgt/worked_examples.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "cgt/catalog.hpp"
#include "cgt/clifford.hpp"
#include "cgt/error.hpp"
#include "cgt/metrics.hpp"

namespace cgt {

namespace {

using Index = PermGroup::Index;
using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (auto x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::vector<std::uint64_t> degrees_of(const CharacterTable& table, const std::vector<std::size_t>& rows) {
  std::vector<std::uint64_t> out;
  for (auto r : rows) out.push_back(table.degrees[r]);
  std::sort(out.begin(), out.end());
  return out;
}

void line(ExampleReport& report, std::string label, const std::string& expected, const std::string& actual) {
  report.lines.push_back({std::move(label), expected, actual, expected == actual});
}

void line(ExampleReport& report, std::string label, const std::string& expected, const std::string& actual,
          bool pass) {
  report.lines.push_back({std::move(label), expected, actual, pass});
}

/// Value of a row of N's table at a parent element of N.
Cyclotomic value_at(const NormalSubgroupData& N, std::size_t row, Index parent_element, const PermGroup& parent) {
  return N.table(row, N.classes.class_of[N.embedded.to_local(parent_element, parent)]);
}

}  // namespace

bool ExampleReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const ExampleLine& l) { return l.pass; });
}

const ExampleLine* ExampleReport::find(const std::string& label) const {
  for (const auto& l : lines)
    if (l.label == label) return &l;
  return nullptr;
}

FrobeniusExampleData example_s3_frobenius_data(std::uint64_t p) {
  PermGroup Fp = frobenius_agl1(p);
  GroupAnalysis G(analyze(direct_product(symmetric(3), Fp)));
  FrobeniusExampleData d;
  d.p = p;
  d.order = G.order();
  const Subgroup& V = G.fitting();
  d.fitting_order = V.order();
  d.fitting_index = G.fitting_index();
  d.quotient_abelian = quotient_group(G.group(), V).is_abelian();
  const auto& Vd = G.fitting_data();
  std::map<std::size_t, std::uint64_t> order_of;
  for (const auto& l : linear_characters(Vd)) order_of[l.row] = l.order;
  for (const auto& orbit : orbits_on_irr(G.group(), Vd)) {
    d.orbit_sizes.push_back(orbit.size());
    const std::uint64_t o = order_of.at(orbit.representative);
    int slot = o == 3 ? 0 : o == p ? 1 : o == 3 * p ? 2 : -1;
    if (slot < 0) continue;
    const auto rows = irr_over(G.table(), Vd, orbit.representative);
    d.fiber_count[slot] = rows.size();
    d.fiber_degrees[slot] = degrees_of(G.table(), rows);
    d.inertia_quotient_order[slot] = inertia_group(G.group(), Vd, orbit.representative).order() / V.order();
  }
  std::sort(d.orbit_sizes.begin(), d.orbit_sizes.end());
  d.acd_above = acd_above(G.table(), G.classes(), V);
  const auto above = irr_above(G.table(), G.classes(), V);
  std::vector<std::size_t> nonlinear;
  for (std::size_t r = 0; r < G.table().size(); ++r)
    if (G.table().degrees[r] > 1) nonlinear.push_back(r);
  d.above_is_nonlinear = above == nonlinear;
  std::vector<std::size_t> lambda_mu;
  for (const auto& orbit : orbits_on_irr(G.group(), Vd)) {
    const auto o = order_of.at(orbit.representative);
    if (o == 3 || o == p) lambda_mu.push_back(orbit.representative);
  }
  d.acd_over_lambda_mu_set = acd_over_set(G.table(), Vd, lambda_mu);
  return d;
}

ExampleReport example_s3_frobenius(std::uint64_t p) {
  const auto start = Clock::now();
  const FrobeniusExampleData d = example_s3_frobenius_data(p);
  ExampleReport r;
  r.title = "S3 x F_" + std::to_string(p);
  const std::uint64_t q = p - 1;
  line(r, "order", std::to_string(6 * p * q), std::to_string(d.order));
  line(r, "|F(G)|", std::to_string(3 * p), std::to_string(d.fitting_order));
  line(r, "|G:F(G)|", std::to_string(2 * q), std::to_string(d.fitting_index));
  line(r, "G/F(G) abelian", "true", d.quotient_abelian ? "true" : "false");
  line(r, "orbit sizes on Irr(V)", join({1, 2, q, 2 * q}), join(d.orbit_sizes));
  line(r, "|Irr(G|lambda)|", std::to_string(q), std::to_string(d.fiber_count[0]));
  line(r, "degrees over lambda", join(std::vector<std::uint64_t>(q, 2)), join(d.fiber_degrees[0]));
  line(r, "|Irr(G|mu)|", "2", std::to_string(d.fiber_count[1]));
  line(r, "degrees over mu", join({q, q}), join(d.fiber_degrees[1]));
  line(r, "|Irr(G|lambda x mu)|", "1", std::to_string(d.fiber_count[2]));
  line(r, "degrees over lambda x mu", join({2 * q}), join(d.fiber_degrees[2]));
  line(r, "|I(lambda)/V|", std::to_string(q), std::to_string(d.inertia_quotient_order[0]));
  line(r, "|I(mu)/V|", "2", std::to_string(d.inertia_quotient_order[1]));
  line(r, "|I(lambda x mu)/V|", "1", std::to_string(d.inertia_quotient_order[2]));
  const Rational expected(BigInt(6 * q), BigInt(p + 2));
  line(r, "acd(G|V)", to_string(expected), to_string(d.acd_above));
  line(r, "acd(G|V) < 6", "true", d.acd_above < 6 ? "true" : "false");
  line(r, "Irr(G|V) = nonlinear characters", "true", d.above_is_nonlinear ? "true" : "false");
  line(r, "acd(G|{lambda,mu})", to_string(Rational(BigInt(4 * q), BigInt(p + 1))), to_string(d.acd_over_lambda_mu_set));
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

WreathExampleData example_s4_wreath_s3_data(bool full_table) {
  WreathExampleData d;
  PermGroup G = wreath_imprimitive(symmetric(4), 3);
  d.order = G.order();
  const ConjugacyData classes = conjugacy_classes(G);
  const Subgroup V = fitting_subgroup(G, classes);
  d.fitting_order = V.order();
  d.fitting_index = G.order() / V.order();
  {
    bool ok = true;
    for (auto x : V.elements()) ok = ok && G.element_order(x) <= 2;
    for (auto x : V.generators())
      for (auto y : V.generators()) ok = ok && G.multiply(x, y) == G.multiply(y, x);
    d.fitting_elementary_abelian = ok;
  }
  const NormalSubgroupData Vd = normal_data(G, classes, V);
  const auto orbits = orbits_on_irr(G, Vd);
  for (const auto& o : orbits) d.orbit_sizes.push_back(o.size());
  std::sort(d.orbit_sizes.begin(), d.orbit_sizes.end());

  // lambda = mu x mu x mu is nonprincipal on each block subgroup W_b.
  auto block_of_support = [&](Index x) -> int {
    int block = -1;
    const auto img = G.images(x);
    for (std::size_t pt = 0; pt < img.size(); ++pt)
      if (img[pt] != pt) {
        const int b = static_cast<int>(pt / 4);
        if (block >= 0 && block != b) return -2;
        block = b;
      }
    return block;
  };
  std::size_t lambda = Vd.table.size();
  for (const auto& o : orbits) {
    bool nontrivial[3] = {false, false, false};
    for (auto x : V.elements()) {
      const int b = block_of_support(x);
      if (b >= 0 && value_at(Vd, o.representative, x, G) != Cyclotomic(1)) nontrivial[b] = true;
    }
    if (nontrivial[0] && nontrivial[1] && nontrivial[2]) {
      lambda = o.representative;
      d.lambda_orbit_size = o.size();
    }
  }
  if (lambda == Vd.table.size()) throw Error(Errc::VerificationFailed, "no orbit is nonprincipal on every block");

  const Subgroup I = inertia_group(G, Vd, lambda);
  d.inertia_order = I.order();
  const EmbeddedSubgroup EI = embed(G, I);
  std::vector<Index> v_local, v_gens;
  for (auto x : V.elements()) v_local.push_back(EI.to_local(x, G));
  for (auto x : V.generators()) v_gens.push_back(EI.to_local(x, G));
  const Subgroup V_in_I(EI.group, v_local, v_gens);

  const AnalyzedGroup quotient = analyze(quotient_group(EI.group, V_in_I));
  d.inertia_quotient_order = quotient.group.order();
  d.inertia_quotient_degrees = quotient.table.degrees;
  std::sort(d.inertia_quotient_degrees.begin(), d.inertia_quotient_degrees.end());
  d.inertia_quotient_acd = acd(quotient.table);
  d.inertia_quotient_classes = quotient.classes.size();
  {
    const AnalyzedGroup c2wr = analyze(wreath_imprimitive(cyclic(2), 3));
    auto degs = c2wr.table.degrees;
    std::sort(degs.begin(), degs.end());
    d.quotient_matches_c2_wreath_s3 = c2wr.group.order() == quotient.group.order() && degs == d.inertia_quotient_degrees;
  }

  const AnalyzedGroup inertia = analyze(EI.group);
  const NormalSubgroupData VI = normal_data(inertia.group, inertia.classes, V_in_I);
  std::size_t lambda_I = VI.table.size();
  for (std::size_t r = 0; r < VI.table.size() && lambda_I == VI.table.size(); ++r) {
    bool same = true;
    for (auto x : V.elements())
      same = same && value_at(VI, r, EI.to_local(x, G), inertia.group) == value_at(Vd, lambda, x, G);
    if (same) lambda_I = r;
  }
  if (lambda_I == VI.table.size()) throw Error(Errc::VerificationFailed, "lambda not found in the inertia group");
  d.lambda_extends = extends(inertia.table, VI, lambda_I);
  const auto fiber = irr_over(inertia.table, VI, lambda_I);
  d.fiber_count_in_inertia = fiber.size();
  d.acd_lambda = Rational(BigInt(G.order() / I.order())) * average_degree(inertia.table, fiber);
  d.conjC = Rational(BigInt(d.fitting_index)) <= d.acd_lambda * d.acd_lambda;

  if (full_table) {
    const CharacterTable table = character_table(G, classes);
    d.acd_lambda_full = acd_over(table, Vd, lambda);
    d.b = b_of(table);
  }
  return d;
}

ExampleReport example_s4_wreath_s3(bool full_table) {
  const auto start = Clock::now();
  const WreathExampleData d = example_s4_wreath_s3_data(full_table);
  ExampleReport r;
  r.title = std::string("S4 wr S3") + (full_table ? " (full table)" : " (inertia route)");
  line(r, "order", "82944", std::to_string(d.order));
  line(r, "|F(G)|", "64", std::to_string(d.fitting_order));
  line(r, "F(G) elementary abelian", "true", d.fitting_elementary_abelian ? "true" : "false");
  line(r, "|G:F(G)|", "1296", std::to_string(d.fitting_index));
  line(r, "orbit sizes on Irr(V)", "1,9,27,27", join(d.orbit_sizes));
  line(r, "orbit of lambda", "27", std::to_string(d.lambda_orbit_size));
  line(r, "|I(lambda)|", "3072", std::to_string(d.inertia_order));
  line(r, "|I(lambda)/V|", "48", std::to_string(d.inertia_quotient_order));
  line(r, "degrees of I(lambda)/V", "1,1,1,1,2,2,3,3,3,3", join(d.inertia_quotient_degrees));
  line(r, "I(lambda)/V degrees match C2 wr S3", "true", d.quotient_matches_c2_wreath_s3 ? "true" : "false");
  line(r, "acd(I(lambda)/V)", "2", to_string(d.inertia_quotient_acd));
  line(r, "lambda extends to I(lambda)", "true", d.lambda_extends ? "true" : "false");
  line(r, "|Irr(I|lambda)| = k(I/V)", std::to_string(d.inertia_quotient_classes), std::to_string(d.fiber_count_in_inertia));
  line(r, "acd(G|lambda)", "54", to_string(d.acd_lambda));
  line(r, "|G:F(G)| <= acd(G|lambda)^2", "1296 <= 2916",
       std::to_string(d.fitting_index) + " <= " + to_string(d.acd_lambda * d.acd_lambda), d.conjC);
  if (d.acd_lambda_full) line(r, "acd(G|lambda) from the full table", "54", to_string(*d.acd_lambda_full));
  if (d.b) line(r, "b(G)", "108", std::to_string(*d.b));
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace cgt

// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "cgt/catalog.hpp"
#include "cgt/character_table.hpp"
#include "cgt/error.hpp"
#include "cgt/metrics.hpp"
#include "cgt/scan.hpp"
#include "cgt/socle_transform.hpp"
#include "cgt/worked_examples.hpp"

namespace {

using namespace cgt;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

// Wall-clock limits in seconds.
constexpr double kLimitA5 = 1.0;
constexpr double kLimitFrobenius = 5.0;
constexpr double kLimitExample41 = 30.0;
constexpr double kLimitExample42Inertia = 60.0;
constexpr double kLimitExample42Full = 900.0;
constexpr double kLimitSocle = 60.0;
constexpr std::uint64_t kPropertyMaxOrder = 2000;

const fs::path kData = CGT_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

Outcome criterion_a5() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto A = analyze(alternating(5));
  const Rational d = acd(A.table), s = acs(A.classes);
  const double t = since(t0);
  o.require(d == Rational(16, 5), "acd = " + to_string(d));
  o.require(s == 12, "acs = " + to_string(s));
  o.require(t < kLimitA5, "runtime " + seconds(t));
  if (o.pass) o.detail = "acd 16/5, acs 12, " + seconds(t);
  return o;
}

Outcome criterion_frobenius() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string summary;
  for (std::uint64_t p : {5, 13, 97}) {
    const GroupAnalysis G(analyze(frobenius_agl1(p)));
    const Rational d = acd(G.table());
    o.require(d < 2, "acd(F" + std::to_string(p) + ") = " + to_string(d));
    o.require(G.fitting_index() == p - 1, "index(F" + std::to_string(p) + ") = " + std::to_string(G.fitting_index()));
    summary += "F" + std::to_string(p) + " acd " + to_string(d) + " index " + std::to_string(G.fitting_index()) + ", ";
  }
  const double t = since(t0);
  o.require(t < kLimitFrobenius, "runtime " + seconds(t));
  if (o.pass) o.detail = summary + seconds(t);
  return o;
}

Outcome criterion_example41() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::uint64_t p : {5, 7, 13}) {
    const auto d = example_s3_frobenius_data(p);
    const std::string tag = "p=" + std::to_string(p) + ": ";
    o.require(d.fiber_count[0] == p - 1 && d.fiber_count[1] == 2 && d.fiber_count[2] == 1, tag + "fiber counts");
    bool degrees = true;
    for (auto x : d.fiber_degrees[0]) degrees = degrees && x == 2;
    for (auto x : d.fiber_degrees[1]) degrees = degrees && x == p - 1;
    degrees = degrees && d.fiber_degrees[2] == std::vector<std::uint64_t>{2 * (p - 1)};
    o.require(degrees, tag + "fiber degrees");
    o.require(d.inertia_quotient_order[0] == p - 1 && d.inertia_quotient_order[1] == 2 &&
                  d.inertia_quotient_order[2] == 1,
              tag + "inertia orders");
    o.require(d.acd_above == Rational(6 * (p - 1), p + 2) && d.acd_above < 6, tag + "acd(G|V) = " + to_string(d.acd_above));
  }
  const double t = since(t0);
  o.require(t < kLimitExample41, "runtime " + seconds(t));
  if (o.pass) o.detail = "p in {5,7,13}, acd(G|V) = 6(p-1)/(p+2), " + seconds(t);
  return o;
}

Outcome criterion_example42() {
  Outcome o;
  auto t0 = Clock::now();
  const auto d = example_s4_wreath_s3_data(false);
  const double inertia_time = since(t0);
  o.require(d.orbit_sizes == std::vector<std::uint64_t>{1, 9, 27, 27}, "orbit sizes");
  o.require(d.quotient_matches_c2_wreath_s3 && d.inertia_quotient_order == 48, "inertia quotient");
  o.require(d.inertia_quotient_degrees == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3}, "quotient degrees");
  o.require(d.inertia_quotient_acd == 2, "quotient acd " + to_string(d.inertia_quotient_acd));
  o.require(d.acd_lambda == 54, "acd(G|lambda) = " + to_string(d.acd_lambda));
  o.require(d.fitting_index == 1296 && BigInt(d.fitting_index) <= BigInt(54) * 54, "1296 <= 54^2");
  o.require(inertia_time < kLimitExample42Inertia, "inertia route " + seconds(inertia_time));

  t0 = Clock::now();
  const auto full = example_s4_wreath_s3_data(true);
  const double full_time = since(t0);
  o.require(full.b && *full.b == 108, "b(G)");
  o.require(full.acd_lambda_full && *full.acd_lambda_full == 54, "full-table acd(G|lambda)");
  o.require(full_time < kLimitExample42Full, "full route " + seconds(full_time));
  if (o.pass)
    o.detail = "orbits 1,9,27,27; acd(G|lambda) 54; b 108; inertia " + seconds(inertia_time) + ", full " +
               seconds(full_time);
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + ACDSCAN_PATH + "\" " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_conjectures() {
  Outcome o;
  const fs::path manifest = kData / "solvable.manifest";
  const auto entries = load_manifest(manifest);
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.name);
  o.require(entries.size() >= 25, "manifest has " + std::to_string(entries.size()) + " groups");
  for (const char* required : {"S4", "D8", "F5", "F13", "F97", "C7:C3", "S4wrS3"})
    o.require(names.count(required) == 1, std::string("manifest lacks ") + required);

  const fs::path out = fs::temp_directory_path() / "acceptance_conjectures.json";
  const int code = run_cli("scan --manifest \"" + manifest.string() + "\" --checks gluck,conjC,thmB,oddorder --out \"" +
                           out.string() + "\" 2>/dev/null");
  o.require(code == 0, "scan exit code " + std::to_string(code));

  CheckSettings settings;
  const auto report = run_scan(manifest, {"gluck", "conjC", "thmB", "oddorder"}, settings);
  std::map<std::string, int> passed;
  for (const auto& g : report.groups)
    for (const auto& c : g.checks)
      if (c.status == CheckStatus::Pass) ++passed[c.check];
  o.require(report.violations() == 0 && report.errors() == 0,
            std::to_string(report.violations()) + " violations, " + std::to_string(report.errors()) + " errors");
  if (o.pass)
    o.detail = std::to_string(entries.size()) + " groups, zero violations; passes gluck " +
               std::to_string(passed["gluck"]) + ", conjC " + std::to_string(passed["conjC"]) + ", thmB " +
               std::to_string(passed["thmB"]) + ", oddorder " + std::to_string(passed["oddorder"]);
  return o;
}

Outcome criterion_gr() {
  Outcome o;
  const auto report = run_scan(kData / "full.manifest", {"gr"}, CheckSettings{});
  std::size_t checked = 0;
  for (const auto& g : report.groups) {
    if (g.error) {
      o.require(false, g.name + ": " + *g.error);
      continue;
    }
    for (const auto& c : g.checks) {
      o.require(c.status == CheckStatus::Pass, g.name + " " + to_string(c.status));
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " groups, both acs bounds hold";
  return o;
}

Outcome criterion_q52() {
  Outcome o;
  const GroupAnalysis A5(analyze(alternating(5)));
  const auto four = check_q52(A5, {4, 1});
  const auto three = check_q52(A5, {3, 1});
  o.require(four.status == CheckStatus::Pass, "60 <= (16/5)^4 gave " + to_string(four.status));
  o.require(three.status == CheckStatus::Fail, "60 > (16/5)^3 gave " + to_string(three.status));
  // independent integer comparison: 60 * 5^e against 16^e
  o.require(BigInt(60) * 625 <= BigInt(65536), "oracle e=4");
  o.require(BigInt(60) * 125 > BigInt(4096), "oracle e=3");
  if (o.pass) o.detail = "60 <= 65536/625 holds, 60 <= 4096/125 fails";
  return o;
}

Outcome criterion_socle() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string summary;
  for (std::size_t u : {2, 3, 4}) {
    const auto shape = parse_shape("A5^" + std::to_string(u), builtin_simple_data());
    const auto r = simulate_socle(shape, ModelAction::full(shape));
    for (const auto& line : r.checks)
      o.require(line.pass, "A5^" + std::to_string(u) + " " + line.name);
    // (2 * average)^2 >= 3^u for every block
    BigInt three_u = 1;
    for (std::size_t i = 0; i < u; ++i) three_u *= 3;
    for (const auto& b : r.delta.blocks) {
      const Rational twice = 2 * b.average();
      o.require(twice * twice >= Rational(three_u), "A5^" + std::to_string(u) + " block below bound");
    }
    summary += "A5^" + std::to_string(u) + " " + std::to_string(r.delta.blocks.size()) + " blocks, ";
  }
  const double t = since(t0);
  o.require(t < kLimitSocle, "runtime " + seconds(t));
  if (o.pass) o.detail = summary + seconds(t);
  return o;
}

// Properties checked with plain cyclotomic arithmetic.
std::string table_property_failure(const AnalyzedGroup& A) {
  const auto& t = A.table;
  const std::size_t k = t.size();
  if (k != A.classes.size()) return "k(table) != k(classes)";
  BigInt squares = 0;
  for (auto d : t.degrees) {
    squares += BigInt(d) * d;
    if (A.group.order() % d != 0) return "degree does not divide |G|";
  }
  if (squares != BigInt(A.group.order())) return "sum of squares";
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic row = 0, col = 0;
      for (std::size_t c = 0; c < k; ++c) row = row + Cyclotomic(BigInt(t.class_sizes[c])) * t(i, c) * t(j, c).conj();
      for (std::size_t r = 0; r < k; ++r) col = col + t(r, i) * t(r, j).conj();
      if (!(row == Cyclotomic(i == j ? BigInt(A.group.order()) : BigInt(0)))) return "row orthogonality";
      if (!(col == Cyclotomic(i == j ? BigInt(A.group.order() / t.class_sizes[i]) : BigInt(0))))
        return "column orthogonality";
    }
  const auto derived = derived_subgroup(A.group, Subgroup::whole(A.group));
  if (linear_count(t) != A.group.order() / derived.order()) return "linear count != |G:G'|";
  return {};
}

Outcome criterion_properties() {
  Outcome o;
  std::set<std::string> seen;
  std::size_t checked = 0;
  for (const char* m : {"solvable.manifest", "full.manifest"}) {
    for (const auto& e : load_manifest(kData / m)) {
      if (!e.expected_order || *e.expected_order > kPropertyMaxOrder || !seen.insert(e.spec).second) continue;
      try {
        const auto A = analyze(build_entry(e, kDefaultOrderCap, kData));
        const auto why = table_property_failure(A);
        o.require(why.empty(), e.name + ": " + why);
      } catch (const Error& err) {
        o.require(false, e.name + ": " + err.what());
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " groups of order <= " + std::to_string(kPropertyMaxOrder) + ", zero failures";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path();
  const std::string manifest = (kData / "full.manifest").string();
  std::string bytes[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("acceptance_full_" + std::to_string(run) + ".json");
    const int code = run_cli("scan --manifest \"" + manifest + "\" --checks gr,q51,q52,q52cube,thmA --jobs 2 --out \"" +
                             out.string() + "\" 2>/dev/null");
    o.require(code == 0, "run " + std::to_string(run) + " exit code " + std::to_string(code));
    if (code != 0) return o;
    bytes[run] = read_text_file(out);
  }
  o.require(!bytes[0].empty(), "empty report");
  o.require(bytes[0] == bytes[1], "reports differ");
  if (o.pass) o.detail = std::to_string(bytes[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  A5 averages", criterion_a5},
      {"2  Frobenius family", criterion_frobenius},
      {"3  S3 x F_p fibres", criterion_example41},
      {"4  S4 wr S3 fibre over lambda", criterion_example42},
      {"5  conjecture scans", criterion_conjectures},
      {"6  acs bounds", criterion_gr},
      {"7  fourth and cube powers on A5", criterion_q52},
      {"8  theta' simulator", criterion_socle},
      {"9  table properties", criterion_properties},
      {"10 determinism", criterion_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << name << "  " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}

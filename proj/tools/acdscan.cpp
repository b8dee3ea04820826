#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgt/catalog.hpp"
#include "cgt/error.hpp"
#include "cgt/metrics.hpp"
#include "cgt/report.hpp"
#include "cgt/scan.hpp"
#include "cgt/socle_transform.hpp"
#include "cgt/worked_examples.hpp"

namespace {

using namespace cgt;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;

struct GroupOptions {
  std::string family;
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::string file;
  std::string spec;
};

struct Common {
  std::size_t cap = kDefaultOrderCap;
  std::string out;
  std::string format;
  bool timings = false;
};

void add_group_options(CLI::App* cmd, GroupOptions& g) {
  cmd->add_option("--family", g.family, "symmetric, alternating, cyclic, dihedral, frobenius, quaternion");
  cmd->add_option("--n", g.n, "Family parameter");
  cmd->add_option("--p", g.p, "Prime for the frobenius family");
  cmd->add_option("--file", g.file, "Group file (degree line, then one image list per generator)");
  cmd->add_option("--spec", g.spec, "Nested group spec, e.g. wreath(symmetric(4),3)");
}

std::pair<std::string, PermGroup> build_group(const GroupOptions& g, std::size_t cap) {
  const int chosen = !g.family.empty() + !g.file.empty() + !g.spec.empty();
  if (chosen != 1) throw Error(Errc::ConfigError, "give exactly one of --family, --file, --spec");
  if (!g.file.empty()) return {g.file, load_group(g.file, cap)};
  if (!g.spec.empty()) return {g.spec, group_from_spec(g.spec, cap)};
  std::string spec;
  if (g.family == "frobenius")
    spec = "frobenius(" + std::to_string(g.p) + ")";
  else if (g.family == "quaternion")
    spec = "quaternion()";
  else
    spec = g.family + "(" + std::to_string(g.n) + ")";
  return {spec, group_from_spec(spec, cap)};
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(Errc::ConfigError, "cannot write " + c.out);
  f << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw Error(Errc::ConfigError, "unknown format '" + format + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_table(const GroupOptions& g, const Common& c) {
  require_format(c.format, {"text", "json"});
  auto [name, G] = build_group(g, c.cap);
  const AnalyzedGroup A = analyze(std::move(G));
  if (c.format == "text") {
    emit(c, export_table(A.group, A.classes, A.table));
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["group"] = name;
  j["order"] = A.group.order();
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < A.classes.size(); ++i)
    classes.push_back({{"order", A.classes.orders[i]},
                       {"size", A.classes.sizes[i]},
                       {"rep", A.group.element(A.classes.reps[i]).cycle_string()}});
  j["classes"] = classes;
  j["degrees"] = A.table.degrees;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < A.table.size(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < A.classes.size(); ++k) {
      std::vector<std::string> coords;
      for (const auto& x : A.table(r, k).coords()) coords.push_back(to_string(x));
      row.push_back({{"conductor", A.table(r, k).conductor()}, {"coords", coords}});
    }
    rows.push_back(row);
  }
  j["values"] = rows;
  emit(c, j.dump(2) + "\n");
  return kExitOk;
}

CheckSettings make_settings(const std::vector<std::string>& exponents, bool square_free) {
  CheckSettings s;
  s.square_free_only = square_free;
  for (const auto& e : exponents) {
    const auto eq = e.find('=');
    if (eq == std::string::npos)
      s.exponents["conjC"] = BoundExponent::parse(e);
    else
      s.exponents[e.substr(0, eq)] = BoundExponent::parse(e.substr(eq + 1));
  }
  for (const auto& [name, value] : s.exponents)
    if (name != "conjC" && name != "thmB" && name != "oddorder" && name != "q53")
      throw Error(Errc::ConfigError, "no exponent to override for check '" + name + "'");
  return s;
}

void validate_checks(const std::vector<std::string>& checks) {
  for (const auto& c : checks)
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw Error(Errc::ConfigError, "unknown check '" + c + "'");
}

int cmd_invariants(const GroupOptions& g, const Common& c, const std::string& checks_text,
                   const std::vector<std::string>& exponents, bool square_free) {
  require_format(c.format, {"text", "json"});
  const auto checks = split_list(checks_text);
  validate_checks(checks);
  const CheckSettings settings = make_settings(exponents, square_free);
  const auto start = Clock::now();
  auto [name, G] = build_group(g, c.cap);
  const GroupAnalysis A(analyze(std::move(G)));
  GroupReport r = make_report(name, name, A, checks, settings);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(c, c.format == "json" ? invariants_json(r, c.timings) : invariants_text(r, c.timings));
  return r.violation() ? kExitViolations : kExitOk;
}

int cmd_example(const std::string& which, std::uint64_t p, bool full_table, const Common& c) {
  require_format(c.format, {"text", "json"});
  ExampleReport r;
  if (which == "4.1")
    r = example_s3_frobenius(p);
  else if (which == "4.2")
    r = example_s4_wreath_s3(full_table);
  else
    throw Error(Errc::ConfigError, "unknown example '" + which + "' (4.1 or 4.2)");
  emit(c, c.format == "json" ? example_json(r, c.timings) : example_text(r, c.timings));
  return r.all_pass() ? kExitOk : kExitViolations;
}

int cmd_scan(const std::string& manifest, const std::string& checks_text, const std::vector<std::string>& exponents,
             bool square_free, std::size_t jobs, std::uint64_t q51_max, const Common& c) {
  require_format(c.format, {"json", "tsv"});
  const auto checks = split_list(checks_text);
  validate_checks(checks);
  CheckSettings settings = make_settings(exponents, square_free);
  settings.q51_max_order = q51_max;
  const ScanReport report = run_scan(manifest, checks, settings, c.cap, jobs);
  emit(c, c.format == "json" ? scan_json(report, c.timings) : scan_tsv(report, c.timings));
  std::cerr << report.groups.size() << " groups, " << report.violations() << " with violations, "
            << report.errors() << " errors\n";
  if (report.violations() > 0) return kExitViolations;
  if (hit_resource_cap(report)) return kExitCap;
  if (report.errors() > 0) return kExitViolations;
  return kExitOk;
}

int cmd_socle(const std::string& shape_text, const std::string& data, const std::string& top, std::uint64_t tuple_cap,
              const Common& c) {
  require_format(c.format, {"text", "json"});
  const auto pack = data.empty() ? builtin_simple_data() : load_simple_data(data);
  const SocleShape shape = parse_shape(shape_text, pack);
  ModelAction action;
  if (top == "full")
    action = ModelAction::full(shape);
  else if (top == "trivial")
    action = ModelAction::trivial_top(shape);
  else
    throw Error(Errc::ConfigError, "unknown top action '" + top + "' (full or trivial)");
  const SocleSimReport r = simulate_socle(shape, action, tuple_cap);
  emit(c, c.format == "json" ? socle_json(r) : socle_text(r));
  return r.all_pass() ? kExitOk : kExitViolations;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("ACDSCAN_CAP")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used == s.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::ConfigError, "ACDSCAN_CAP must be a positive integer");
  }
  return kDefaultOrderCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, Clifford averages and conjecture scans for permutation groups"};
  app.require_subcommand(1);

  Common common;
  GroupOptions group;
  std::string checks = "gluck,conjC,thmB,oddorder,gr";
  std::vector<std::string> exponents;
  bool square_free = false;
  std::string which;
  std::uint64_t p = 5;
  bool full_table = false;
  std::string manifest;
  std::size_t jobs = 1;
  std::uint64_t q51_max = 2000;
  std::string shape, data, top = "full";
  std::uint64_t tuple_cap = kDefaultTupleCap;
  std::optional<std::size_t> cap_flag;

  // The default format depends on the subcommand and is filled in after parsing.
  auto common_flags = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap_flag, "Element enumeration cap (default $ACDSCAN_CAP or 200000)");
    cmd->add_option("--out", common.out, "Output path (default stdout)");
    cmd->add_option("--format", common.format, "Output format");
    cmd->add_flag("--timings", common.timings, "Include wall-clock timings");
  };

  auto* table = app.add_subcommand("table", "Print the exact character table");
  add_group_options(table, group);
  common_flags(table);

  auto* inv = app.add_subcommand("invariants", "acd, acs, b, Fitting data and checks for one group");
  add_group_options(inv, group);
  inv->add_option("--checks", checks, "Comma-separated checks");
  inv->add_option("--exponent", exponents, "Exponent override: value (conjC) or check=value");
  inv->add_flag("--square-free", square_free, "Only linear characters of square-free order");
  common_flags(inv);

  auto* ex = app.add_subcommand("example", "Reproduce a worked example: 4.1 is S3 x F_p, 4.2 is S4 wr S3");
  ex->add_option("which", which, "4.1 (S3 x F_p) or 4.2 (S4 wr S3)")->required();
  ex->add_option("--p", p, "Odd prime p for S3 x F_p");
  ex->add_flag("--full-table", full_table, "S4 wr S3: also build the full table of G");
  common_flags(ex);

  auto* scan = app.add_subcommand("scan", "Run checks over a catalog manifest");
  scan->add_option("--manifest", manifest, "Manifest file")->required();
  scan->add_option("--checks", checks, "Comma-separated checks");
  scan->add_option("--exponent", exponents, "Exponent override: value (conjC) or check=value");
  scan->add_flag("--square-free", square_free, "Only linear characters of square-free order");
  scan->add_option("--jobs", jobs, "Parallel workers over manifest entries");
  scan->add_option("--q51-max-order", q51_max, "Largest group order for the q51 lattice scan");
  common_flags(scan);

  auto* socle = app.add_subcommand("socle-sim", "Simulate the theta' construction on a socle shape");
  socle->add_option("--shape", shape, "Shape such as A5^2 or A5^1*A6^1")->required();
  socle->add_option("--data", data, "Simple-group data file (default: built-in A5, A6, PSL(2,7))");
  socle->add_option("--top", top, "Top action on copies: full or trivial");
  socle->add_option("--tuple-cap", tuple_cap, "Largest number of tuples to enumerate");
  common_flags(socle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    common.cap = cap_flag ? *cap_flag : default_cap();
    if (common.cap < 1) throw Error(Errc::ConfigError, "--cap must be at least 1");
    if (common.format.empty()) common.format = scan->parsed() ? "json" : "text";
    if (table->parsed()) return cmd_table(group, common);
    if (inv->parsed()) return cmd_invariants(group, common, checks, exponents, square_free);
    if (ex->parsed()) return cmd_example(which, p, full_table, common);
    if (scan->parsed()) return cmd_scan(manifest, checks, exponents, square_free, jobs, q51_max, common);
    if (socle->parsed()) return cmd_socle(shape, data, top, tuple_cap, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_resource_cap(e.code()) ? kExitCap : kExitConfig;
  }
  return kExitConfig;
}

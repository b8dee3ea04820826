#include "cgt/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cgt {

namespace {

using Json = nlohmann::ordered_json;

Json check_json(const CheckResult& c) {
  Json j;
  j["check"] = c.check;
  j["status"] = to_string(c.status);
  j["informational"] = c.informational;
  j["detail"] = c.detail;
  Json values = Json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  j["values"] = values;
  return j;
}

Json group_json(const GroupReport& g, bool timings) {
  Json j;
  j["name"] = g.name;
  j["spec"] = g.spec;
  if (g.error) {
    j["error"] = *g.error;
    j["error_code"] = g.error_code.value_or("");
    return j;
  }
  j["order"] = g.order;
  j["k"] = g.k;
  j["acd"] = to_string(g.acd);
  j["acs"] = to_string(g.acs);
  j["b"] = g.b;
  j["fitting_index"] = g.fitting_index;
  j["radical_index"] = g.radical_index;
  j["solvable"] = g.solvable;
  j["derived_length"] = g.derived_length ? Json(*g.derived_length) : Json(nullptr);
  j["degrees"] = g.degrees;
  Json fibers = Json::array();
  for (const auto& f : g.fibers)
    fibers.push_back(Json{{"row", f.row},
                          {"order", f.order},
                          {"square_free", f.square_free},
                          {"orbit_size", f.orbit_size},
                          {"count", f.count},
                          {"acd", to_string(f.acd)}});
  j["fibers"] = fibers;
  Json checks = Json::array();
  for (const auto& c : g.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["violation"] = g.violation();
  if (timings) j["seconds"] = g.seconds;
  return j;
}

std::string tsv_escape(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::size_t ScanReport::violations() const {
  return static_cast<std::size_t>(std::count_if(groups.begin(), groups.end(), [](const GroupReport& g) { return g.violation(); }));
}

std::size_t ScanReport::errors() const {
  return static_cast<std::size_t>(std::count_if(groups.begin(), groups.end(), [](const GroupReport& g) { return g.error.has_value(); }));
}

std::string scan_json(const ScanReport& report, bool timings) {
  Json j;
  j["tool"] = "acdscan";
  j["version"] = kToolVersion;
  j["manifest"] = report.manifest;
  j["checks"] = report.checks;
  j["cap"] = report.cap;
  Json groups = Json::array();
  for (const auto& g : report.groups) groups.push_back(group_json(g, timings));
  j["groups"] = groups;
  j["summary"] = Json{{"groups", report.groups.size()}, {"violations", report.violations()}, {"errors", report.errors()}};
  if (timings) j["seconds"] = report.seconds;
  return j.dump(2) + "\n";
}

std::string scan_tsv(const ScanReport& report, bool timings) {
  std::ostringstream out;
  out << "group\torder\tk\tacd\tacs\tb\tfitting_index\tradical_index\tcheck\tstatus\tvalues";
  if (timings) out << "\tseconds";
  out << "\n";
  for (const auto& g : report.groups) {
    if (g.error) {
      out << g.name << "\t\t\t\t\t\t\t\terror\t" << g.error_code.value_or("") << "\t" << tsv_escape(*g.error);
      if (timings) out << "\t" << g.seconds;
      out << "\n";
      continue;
    }
    for (const auto& c : g.checks) {
      std::string values;
      for (const auto& [k, v] : c.values) values += (values.empty() ? "" : ";") + k + "=" + v;
      out << g.name << '\t' << g.order << '\t' << g.k << '\t' << to_string(g.acd) << '\t' << to_string(g.acs) << '\t'
          << g.b << '\t' << g.fitting_index << '\t' << g.radical_index << '\t' << c.check << '\t'
          << to_string(c.status) << '\t' << tsv_escape(values);
      if (timings) out << '\t' << g.seconds;
      out << "\n";
    }
  }
  return out.str();
}

std::string example_json(const ExampleReport& report, bool timings) {
  Json j;
  j["example"] = report.title;
  Json lines = Json::array();
  for (const auto& l : report.lines)
    lines.push_back(Json{{"label", l.label}, {"expected", l.expected}, {"actual", l.actual}, {"pass", l.pass}});
  j["lines"] = lines;
  j["pass"] = report.all_pass();
  if (timings) j["seconds"] = report.seconds;
  return j.dump(2) + "\n";
}

std::string example_text(const ExampleReport& report, bool timings) {
  std::ostringstream out;
  out << report.title << "\n";
  for (const auto& l : report.lines)
    out << (l.pass ? "PASS  " : "FAIL  ") << l.label << ": " << l.actual << " (expected " << l.expected << ")\n";
  out << (report.all_pass() ? "PASS" : "FAIL");
  if (timings) out << "  " << report.seconds << " s";
  out << "\n";
  return out.str();
}

std::string socle_json(const SocleSimReport& report) {
  Json j;
  j["shape"] = report.shape;
  j["tuples"] = report.tuples;
  j["theta_prime_defined"] = report.defined;
  j["orbits"] = report.orbits;
  j["bound"] = report.bound.str();
  j["paired_blocks"] = report.delta.paired;
  j["blocks"] = report.delta.blocks.size();
  j["block_minimum"] = to_string(report.delta.block_minimum);
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"check", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"failures", c.failures}});
  j["checks"] = checks;
  j["pass"] = report.all_pass();
  return j.dump(2) + "\n";
}

std::string socle_text(const SocleSimReport& report) {
  std::ostringstream out;
  out << "shape " << report.shape << ": " << report.tuples << " tuples, " << report.defined
      << " with theta' defined, " << report.orbits << " orbits\n";
  out << "bound " << report.bound.str() << ", blocks " << report.delta.blocks.size() << " (" << report.delta.paired
      << " paired), block minimum " << to_string(report.delta.block_minimum) << "\n";
  for (const auto& c : report.checks)
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name << " (" << c.checked << " checked, " << c.failures
        << " failures)\n";
  out << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string invariants_json(const GroupReport& report, bool timings) { return group_json(report, timings).dump(2) + "\n"; }

std::string invariants_text(const GroupReport& g, bool timings) {
  std::ostringstream out;
  out << "group " << g.name << "\n";
  out << "order " << g.order << "\nk " << g.k << "\nacd " << to_string(g.acd) << "\nacs " << to_string(g.acs)
      << "\nb " << g.b << "\nfitting_index " << g.fitting_index << "\nradical_index " << g.radical_index
      << "\nsolvable " << (g.solvable ? "true" : "false") << "\n";
  if (g.derived_length) out << "derived_length " << *g.derived_length << "\n";
  out << "degrees";
  for (auto d : g.degrees) out << ' ' << d;
  out << "\n";
  for (const auto& f : g.fibers)
    out << "fiber row " << f.row << " order " << f.order << (f.square_free ? " square-free" : "") << " orbit "
        << f.orbit_size << " count " << f.count << " acd " << to_string(f.acd) << "\n";
  for (const auto& c : g.checks) {
    out << c.check << ' ' << to_string(c.status);
    for (const auto& [k, v] : c.values) out << ' ' << k << '=' << v;
    out << "\n";
  }
  if (timings) out << "seconds " << g.seconds << "\n";
  return out.str();
}

}  // namespace cgt

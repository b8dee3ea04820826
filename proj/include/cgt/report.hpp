#pragma once

#include <string>
#include <vector>

#include "cgt/metrics.hpp"
#include "cgt/socle_transform.hpp"
#include "cgt/worked_examples.hpp"

namespace cgt {

inline constexpr const char* kToolVersion = "1.0.0";

struct ScanReport {
  std::string manifest;
  std::vector<std::string> checks;
  std::size_t cap = 0;
  std::vector<GroupReport> groups;
  double seconds = 0;

  std::size_t violations() const;
  std::size_t errors() const;
};

/// Structured report, one document per run. Timings appear only when asked for,
/// so the default output is byte-stable.
std::string scan_json(const ScanReport& report, bool timings);
/// One row per group x check.
std::string scan_tsv(const ScanReport& report, bool timings);

std::string example_json(const ExampleReport& report, bool timings);
std::string example_text(const ExampleReport& report, bool timings);

std::string socle_json(const SocleSimReport& report);
std::string socle_text(const SocleSimReport& report);

std::string invariants_json(const GroupReport& report, bool timings);
std::string invariants_text(const GroupReport& report, bool timings);

}  // namespace cgt

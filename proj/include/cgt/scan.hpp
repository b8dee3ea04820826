#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cgt/metrics.hpp"
#include "cgt/report.hpp"

namespace cgt {

/// Builds and checks every manifest entry. Per-entry failures are recorded in the
/// report and never stop the run. Entries are spread over `jobs` threads; the
/// report keeps manifest order whatever the schedule.
ScanReport run_scan(const std::filesystem::path& manifest, const std::vector<std::string>& checks,
                    const CheckSettings& settings, std::size_t cap = kDefaultOrderCap, std::size_t jobs = 1);

/// Some entry stopped at a size limit.
bool hit_resource_cap(const ScanReport& report);

}  // namespace cgt

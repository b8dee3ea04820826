#include "cgt/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "cgt/catalog.hpp"
#include "cgt/error.hpp"

namespace cgt {

namespace {
using Clock = std::chrono::steady_clock;
}

ScanReport run_scan(const std::filesystem::path& manifest, const std::vector<std::string>& checks,
                    const CheckSettings& settings, std::size_t cap, std::size_t jobs) {
  const auto entries = load_manifest(manifest);
  const auto base = manifest.parent_path();

  ScanReport report;
  report.manifest = manifest.filename().string();
  report.checks = checks;
  report.cap = cap;
  report.groups.resize(entries.size());
  const auto start = Clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto t0 = Clock::now();
      GroupReport& out = report.groups[i];
      try {
        const GroupAnalysis A(analyze(build_entry(entries[i], cap, base)));
        out = make_report(entries[i].name, entries[i].spec, A, checks, settings);
      } catch (const Error& e) {
        out = GroupReport{};
        out.name = entries[i].name;
        out.spec = entries[i].spec;
        out.error = e.what();
        out.error_code = std::string(errc_name(e.code()));
      }
      out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
  };
  const std::size_t width = std::max<std::size_t>(1, std::min(jobs, entries.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

bool hit_resource_cap(const ScanReport& report) {
  for (const auto& g : report.groups) {
    if (!g.error_code) continue;
    for (auto code : {Errc::OrderCapExceeded, Errc::LatticeCapExceeded, Errc::TupleCapExceeded})
      if (*g.error_code == errc_name(code)) return true;
  }
  return false;
}

}  // namespace cgt

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "kinpar/config.hpp"
#include "kinpar/moments.hpp"
#include "kinpar/parareal.hpp"

namespace kinpar {

struct TimingReport {
  std::vector<double> iteration_seconds;
  PropagatorTimes max_times;
  std::optional<double> parareal_seconds;
  std::optional<double> fine_seconds;
  std::optional<double> fluid_seconds;
  std::optional<double> speedup;  // fine_seconds / parareal_seconds
  std::optional<SpeedupEstimate> estimate;
  std::size_t iterations = 0;
  bool converged = false;
};

struct ComparisonResult {
  TimingReport report;
  std::optional<std::vector<MomentField>> parareal;
  std::optional<std::vector<MomentField>> fine;
  std::optional<std::vector<MomentField>> fluid;
  std::vector<ConvergenceRecord> records;
};

// Runs each requested mode, timing it. With write_artifacts, results go to
// <output_dir>/<mode>/ plus <output_dir>/timing.json. Artifacts of modes that
// completed are flushed before a solver abort propagates.
ComparisonResult run_comparison(const RunConfig& config, std::span<const RunMode> modes,
                                bool write_artifacts = true);

void write_timing_report(const TimingReport& report, const RunConfig& config,
                         const std::filesystem::path& path);

}  // namespace kinpar

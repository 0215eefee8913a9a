#include "kinpar/comparison.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

#include "kinpar/errors.hpp"
#include "kinpar/output.hpp"

namespace kinpar {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json times_json(const PropagatorTimes& t) {
  return {{"kinetic", t.kinetic}, {"fluid", t.fluid}, {"lift", t.lift}, {"project", t.project}};
}

}  // namespace

void write_timing_report(const TimingReport& report, const RunConfig& config,
                         const fs::path& path) {
  nlohmann::json j;
  j["workers"] = config.workers;
  j["n_g"] = config.n_g;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["iteration_seconds"] = report.iteration_seconds;
  j["max_slice_seconds"] = times_json(report.max_times);
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  j["parareal_seconds"] = opt(report.parareal_seconds);
  j["fine_seconds"] = opt(report.fine_seconds);
  j["fluid_seconds"] = opt(report.fluid_seconds);
  j["speedup"] = opt(report.speedup);
  if (report.estimate) {
    j["k_opt"] = report.estimate->k_opt;
    j["k_max_profitable"] = report.estimate->k_max_profitable;
    j["ideal_parareal_seconds"] =
        report.estimate->parareal_cost(static_cast<double>(report.iterations));
    j["ideal_serial_fine_seconds"] = report.estimate->serial_fine_cost();
  }

  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path().string(), "cannot create directory: " + ec.message());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError(path.string(), "write failed");
}

ComparisonResult run_comparison(const RunConfig& config, std::span<const RunMode> modes,
                                bool write_artifacts) {
  const MultiscaleProblem problem = make_problem(config);
  const MomentField U0 = initial_moments(config, problem.grid);
  const PararealConfig pc = make_parareal_config(config);
  const fs::path root(config.output_dir);

  ComparisonResult result;
  TimingReport& report = result.report;

  auto finish = [&] {
    if (report.fine_seconds && report.parareal_seconds && *report.parareal_seconds > 0.0)
      report.speedup = *report.fine_seconds / *report.parareal_seconds;
    if (report.max_times.kinetic > 0.0)
      report.estimate = estimate_k_opt(report.max_times, config.n_g, config.workers);
    if (write_artifacts) write_timing_report(report, config, root / "timing.json");
  };

  for (RunMode mode : modes) {
    const fs::path dir = root / std::string(to_string(mode));
    const auto start = Clock::now();
    try {
      switch (mode) {
        case RunMode::Fluid: {
          result.fluid = run_serial_fluid(U0, problem);
          report.fluid_seconds = seconds_since(start);
          if (write_artifacts) write_snapshots(*result.fluid, problem.grid.space, dir);
          break;
        }
        case RunMode::Fine: {
          PropagatorTimes t;
          result.fine = run_serial_fine(U0, problem, &t);
          report.fine_seconds = seconds_since(start);
          report.max_times.absorb(t);
          if (write_artifacts) write_snapshots(*result.fine, problem.grid.space, dir);
          break;
        }
        case RunMode::Parareal: {
          auto sink = [&](const ConvergenceRecord& r) {
            result.records.push_back(r);
            report.iteration_seconds.push_back(r.seconds);
          };
          PararealResult pr = run_parareal(U0, problem, pc, sink);
          report.parareal_seconds = seconds_since(start);
          report.max_times.absorb(pr.max_times);
          report.iterations = pr.records.size();
          report.converged = pr.converged;
          result.parareal = std::move(pr.trajectory.snapshots);
          if (write_artifacts) {
            write_snapshots(*result.parareal, problem.grid.space, dir);
            write_convergence(result.records, dir);
          }
          break;
        }
      }
    } catch (const Error&) {
      if (write_artifacts) {
        if (mode == RunMode::Parareal && !result.records.empty())
          write_convergence(result.records, dir);
        finish();
      }
      throw;
    }
  }
  finish();
  return result;
}

}  // namespace kinpar

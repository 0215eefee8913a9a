#include "kinpar/parareal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "kinpar/errors.hpp"
#include "kinpar/lifting.hpp"

namespace kinpar {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void subtract_into(const MomentField& a, const MomentField& b, MomentField& out) {
  const std::size_t n = a.size();
  out.rho.resize(n);
  out.u.resize(n);
  out.theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.rho[i] = a.rho[i] - b.rho[i];
    for (std::size_t d = 0; d < 3; ++d) out.u[i][d] = a.u[i][d] - b.u[i][d];
    out.theta[i] = a.theta[i] - b.theta[i];
  }
}

void add_into(const MomentField& a, const MomentField& b, MomentField& out) {
  const std::size_t n = a.size();
  out.rho.resize(n);
  out.u.resize(n);
  out.theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.rho[i] = a.rho[i] + b.rho[i];
    for (std::size_t d = 0; d < 3; ++d) out.u[i][d] = a.u[i][d] + b.u[i][d];
    out.theta[i] = a.theta[i] + b.theta[i];
  }
}

std::size_t first_active_slice(std::size_t k, const PararealConfig& config) {
  return config.use_frozen_prefix ? k : 1;
}

}  // namespace

void MultiscaleProblem::validate() const {
  if (times.n_g < 1) throw ConfigError("time grids are not initialized");
  kinetic.validate(grid);
  fluid.validate(grid);
}

void PararealConfig::validate() const {
  if (k_max < 1) throw ConfigError("k_max must be at least 1");
  if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (workers < 1) throw ConfigError("need at least one worker");
}

void PropagatorTimes::absorb(const SliceTiming& t) {
  kinetic = std::max(kinetic, t.kinetic);
  fluid = std::max(fluid, t.fluid);
  lift = std::max(lift, t.lift);
  project = std::max(project, t.project);
}

void PropagatorTimes::absorb(const PropagatorTimes& t) {
  kinetic = std::max(kinetic, t.kinetic);
  fluid = std::max(fluid, t.fluid);
  lift = std::max(lift, t.lift);
  project = std::max(project, t.project);
}

MomentField coarse_propagate(const MultiscaleProblem& problem, const MomentField& U,
                             std::size_t n, SliceTiming* timing) {
  const auto start = Clock::now();
  MomentField out =
      propagate_fluid(U, problem.times.coarse_time(n - 1), problem.times.coarse_time(n),
                      problem.times.dt_g, problem.grid, problem.fluid);
  if (timing) timing->fluid = seconds_since(start);
  return out;
}

MomentField fine_propagate(const MultiscaleProblem& problem, const MomentField& U,
                           std::size_t n, SliceTiming* timing) {
  auto start = Clock::now();
  const Distribution f0 = lift(U, problem.grid, false);
  if (timing) timing->lift = seconds_since(start);

  start = Clock::now();
  const Distribution f1 =
      propagate_kinetic(f0, problem.times.coarse_time(n - 1), problem.times.coarse_time(n),
                        problem.times.dt_f, problem.grid, problem.kinetic);
  if (timing) timing->kinetic = seconds_since(start);

  start = Clock::now();
  MomentField out = project(f1, problem.grid);
  if (timing) timing->project = seconds_since(start);
  return out;
}

ParTrajectory initial_coarse_sweep(const MomentField& U0, const MultiscaleProblem& problem) {
  problem.validate();
  if (U0.size() != problem.grid.n_x())
    throw ConfigError("initial moments do not match the spatial grid");
  if (first_invalid_cell(U0) != U0.size())
    throw DegenerateStateError("initial moments have non-positive density or temperature");

  const std::size_t n_g = problem.times.n_g;
  ParTrajectory traj;
  traj.snapshots.reserve(n_g + 1);
  traj.snapshots.push_back(U0);
  for (std::size_t n = 1; n <= n_g; ++n) {
    try {
      traj.snapshots.push_back(coarse_propagate(problem, traj.snapshots[n - 1], n));
    } catch (const Error& e) {
      throw SliceError(e.what(), n);
    }
  }
  traj.previous = traj.snapshots;
  traj.jumps.assign(n_g, MomentField(U0.size()));
  return traj;
}

JumpReport compute_jumps(ParTrajectory& traj, std::size_t k, const MultiscaleProblem& problem,
                         const PararealConfig& config) {
  const auto start = Clock::now();
  const std::size_t n_g = traj.n_slices();
  JumpReport report;
  report.first_slice = first_active_slice(k, config);
  if (report.first_slice > n_g) return report;
  report.slices = n_g - report.first_slice + 1;

  std::vector<SliceTiming> timings(n_g + 1);
  // Each task reads snapshots[n - 1] (iterate k - 1) and writes jumps[n - 1] only.
  parallel_for(report.first_slice, n_g + 1, config.workers, config.schedule, [&](std::size_t n) {
    try {
      const MomentField& start_state = traj.snapshots[n - 1];
      const MomentField fine = fine_propagate(problem, start_state, n, &timings[n]);
      const MomentField coarse = coarse_propagate(problem, start_state, n, &timings[n]);
      subtract_into(fine, coarse, traj.jump(n));
    } catch (const SliceError&) {
      throw;
    } catch (const Error& e) {
      throw SliceError(e.what(), n);
    }
  });

  for (std::size_t n = report.first_slice; n <= n_g; ++n) report.max_times.absorb(timings[n]);
  report.seconds = seconds_since(start);
  return report;
}

CorrectionResult sequential_correction(ParTrajectory& traj, std::size_t k,
                                       const MultiscaleProblem& problem,
                                       const PararealConfig& config) {
  const std::size_t n_g = traj.n_slices();
  const std::size_t first = first_active_slice(k, config);
  CorrectionResult result;
  for (std::size_t n = first; n <= n_g; ++n) traj.previous[n] = traj.snapshots[n];

  for (std::size_t n = first; n <= n_g; ++n) {
    MomentField coarse;
    try {
      coarse = coarse_propagate(problem, traj.snapshots[n - 1], n);
    } catch (const Error& e) {
      throw SliceError(e.what(), n);
    }
    add_into(coarse, traj.jump(n), traj.snapshots[n]);
    const std::size_t bad = first_invalid_cell(traj.snapshots[n]);
    if (bad != traj.snapshots[n].size())
      throw CorrectionOvershootError(
          "correction produced non-positive density or temperature at cell " + std::to_string(bad),
          n);
    const auto diff = component_max_abs_difference(traj.snapshots[n], traj.previous[n]);
    for (std::size_t c = 0; c < 5; ++c)
      result.component_errors[c] = std::max(result.component_errors[c], diff[c]);
  }
  result.error =
      *std::max_element(result.component_errors.begin(), result.component_errors.end());
  traj.frozen_upto = std::min(k, n_g);
  traj.iteration = k;
  return result;
}

PararealResult run_parareal(const MomentField& U0, const MultiscaleProblem& problem,
                            const PararealConfig& config, const ConvergenceSink& sink) {
  config.validate();
  PararealResult result;
  result.trajectory = initial_coarse_sweep(U0, problem);
  const std::size_t n_g = problem.times.n_g;

  for (std::size_t k = 1;; ++k) {
    const auto start = Clock::now();
    const JumpReport jumps = compute_jumps(result.trajectory, k, problem, config);
    const CorrectionResult corr = sequential_correction(result.trajectory, k, problem, config);
    result.max_times.absorb(jumps.max_times);

    ConvergenceRecord record;
    record.k = k;
    record.error = corr.error;
    record.seconds = seconds_since(start);
    record.component_errors = corr.component_errors;
    if (k == 1) result.first_iteration_seconds = record.seconds;
    result.records.push_back(record);
    if (sink) sink(record);

    if (corr.error < config.tol) {
      result.converged = true;
      break;
    }
    if (k >= config.k_max || k >= n_g) break;
  }
  return result;
}

std::vector<MomentField> run_serial_fine(const MomentField& U0, const MultiscaleProblem& problem,
                                         PropagatorTimes* times) {
  problem.validate();
  std::vector<MomentField> out{U0};
  for (std::size_t n = 1; n <= problem.times.n_g; ++n) {
    SliceTiming t;
    try {
      out.push_back(fine_propagate(problem, out.back(), n, &t));
    } catch (const Error& e) {
      throw SliceError(e.what(), n);
    }
    if (times) times->absorb(t);
  }
  return out;
}

std::vector<MomentField> run_serial_fluid(const MomentField& U0,
                                          const MultiscaleProblem& problem) {
  return initial_coarse_sweep(U0, problem).snapshots;
}

WorkRange work_distribution(std::size_t work, std::size_t n_p, std::size_t rank) {
  if (n_p == 0) throw ConfigError("work distribution needs at least one rank");
  if (rank >= n_p) throw ConfigError("rank " + std::to_string(rank) + " out of range");
  const std::size_t chunk = work / n_p;
  const std::size_t remainder = work % n_p;
  WorkRange r;
  r.start = rank * chunk + std::min(remainder, rank) + 1;
  r.end = (rank + 1) * chunk + std::min(remainder, rank + 1);
  r.my_chunk = static_cast<long long>(r.end) - static_cast<long long>(r.start);
  return r;
}

double SpeedupEstimate::parareal_cost(double k) const {
  const double per_slice =
      (times.lift + times.project + times.kinetic + times.fluid) / static_cast<double>(n_p) +
      times.fluid;
  return times.fluid + static_cast<double>(n_g) * k * per_slice;
}

double SpeedupEstimate::serial_fine_cost() const {
  return static_cast<double>(n_g) * times.kinetic;
}

SpeedupEstimate estimate_k_opt(const PropagatorTimes& times, std::size_t n_g, std::size_t n_p) {
  if (!(times.kinetic > 0.0)) throw ConfigError("kinetic time must be positive");
  if (times.fluid < 0.0 || times.lift < 0.0 || times.project < 0.0)
    throw ConfigError("propagator times must be non-negative");
  if (n_g < 1 || n_p < 1) throw ConfigError("n_g and n_p must be at least 1");

  SpeedupEstimate est;
  est.times = times;
  est.n_g = n_g;
  est.n_p = n_p;
  const double g = static_cast<double>(n_g);
  const double per_iteration =
      g * ((times.lift + times.project + times.kinetic + times.fluid) / static_cast<double>(n_p) +
           times.fluid);
  const double ratio = (g * times.kinetic - times.fluid) / per_iteration;
  est.k_opt = static_cast<long long>(std::ceil(ratio));
  est.k_max_profitable = static_cast<long long>(std::floor(ratio));
  return est;
}

}  // namespace kinpar

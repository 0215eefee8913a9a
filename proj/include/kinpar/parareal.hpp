#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "kinpar/fluid.hpp"
#include "kinpar/grid.hpp"
#include "kinpar/kinetic.hpp"
#include "kinpar/moments.hpp"
#include "kinpar/parallel.hpp"

namespace kinpar {

// Everything the two propagators need: phase grid, time grids and solver
// parameters. The kinetic step is capped by dt_f, the fluid step by dt_g.
struct MultiscaleProblem {
  PhaseGrid grid;
  TimeGrids times;
  KineticParams kinetic;
  FluidParams fluid;

  void validate() const;
};

struct PararealConfig {
  std::size_t k_max = 80;
  double tol = 1e-8;
  bool use_frozen_prefix = true;  // optimized variant: skip already exact slices
  unsigned workers = 1;
  Schedule schedule = Schedule::Dynamic;

  void validate() const;
};

// Snapshots U^{n,k} at the coarse times, the previous iterate and the jumps.
struct ParTrajectory {
  std::vector<MomentField> snapshots;  // n_g + 1 entries, current iterate
  std::vector<MomentField> previous;   // iterate k - 1
  std::vector<MomentField> jumps;      // jumps[n - 1] holds the jump of slice n
  std::size_t frozen_upto = 0;         // snapshots[0..frozen_upto] are final
  std::size_t iteration = 0;

  std::size_t n_slices() const { return snapshots.empty() ? 0 : snapshots.size() - 1; }
  MomentField& jump(std::size_t n) { return jumps[n - 1]; }
  const MomentField& jump(std::size_t n) const { return jumps[n - 1]; }
};

// Wall-clock seconds spent in each stage of one slice propagation.
struct SliceTiming {
  double lift = 0.0;
  double kinetic = 0.0;
  double project = 0.0;
  double fluid = 0.0;
};

// Maxima over slices; these feed the k_opt estimate.
struct PropagatorTimes {
  double kinetic = 0.0;
  double fluid = 0.0;
  double lift = 0.0;
  double project = 0.0;

  void absorb(const SliceTiming& t);
  void absorb(const PropagatorTimes& t);
};

struct ConvergenceRecord {
  std::size_t k = 0;
  double error = 0.0;
  double seconds = 0.0;
  std::array<double, 5> component_errors{};  // (rho, ux, uy, uz, theta)
};

using ConvergenceSink = std::function<void(const ConvergenceRecord&)>;

// Coarse propagator G over slice n, i.e. from T^{n-1} to T^n.
MomentField coarse_propagate(const MultiscaleProblem& problem, const MomentField& U,
                             std::size_t n, SliceTiming* timing = nullptr);

// P o F o L over slice n.
MomentField fine_propagate(const MultiscaleProblem& problem, const MomentField& U,
                           std::size_t n, SliceTiming* timing = nullptr);

ParTrajectory initial_coarse_sweep(const MomentField& U0, const MultiscaleProblem& problem);

struct JumpReport {
  std::size_t first_slice = 0;
  std::size_t slices = 0;
  PropagatorTimes max_times;
  double seconds = 0.0;
};

// Jumps of iteration k from the current snapshots (iterate k - 1), one task per
// slice. Throws SliceError naming the lowest failing slice.
JumpReport compute_jumps(ParTrajectory& traj, std::size_t k, const MultiscaleProblem& problem,
                         const PararealConfig& config);

struct CorrectionResult {
  double error = 0.0;
  std::array<double, 5> component_errors{};
};

// Sequential coarse sweep plus jumps, producing iterate k in place.
CorrectionResult sequential_correction(ParTrajectory& traj, std::size_t k,
                                       const MultiscaleProblem& problem,
                                       const PararealConfig& config);

struct PararealResult {
  ParTrajectory trajectory;
  std::vector<ConvergenceRecord> records;
  PropagatorTimes max_times;
  double first_iteration_seconds = 0.0;
  bool converged = false;  // stopped on error < tol
};

// Initial sweep, then jumps + correction until error < tol or k_max
// iterations (or every slice is frozen). Records reach `sink` as produced.
PararealResult run_parareal(const MomentField& U0, const MultiscaleProblem& problem,
                            const PararealConfig& config, const ConvergenceSink& sink = {});

// Sequential reference trajectories at the coarse times.
std::vector<MomentField> run_serial_fine(const MomentField& U0, const MultiscaleProblem& problem,
                                         PropagatorTimes* times = nullptr);
std::vector<MomentField> run_serial_fluid(const MomentField& U0, const MultiscaleProblem& problem);

struct SpeedupEstimate {
  long long k_opt = 0;             // ceiling of the break-even iteration count
  long long k_max_profitable = 0;  // floor: largest k with parareal_cost(k) <= serial cost
  PropagatorTimes times;
  std::size_t n_g = 0;
  std::size_t n_p = 1;

  // Ideal cost of k parareal iterations.
  double parareal_cost(double k) const;
  double serial_fine_cost() const;
};

// Break-even iteration count between ideal parareal and serial fine.
SpeedupEstimate estimate_k_opt(const PropagatorTimes& times, std::size_t n_g, std::size_t n_p);

}  // namespace kinpar

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "kinpar/cases.hpp"
#include "kinpar/grid.hpp"
#include "kinpar/moments.hpp"
#include "kinpar/parallel.hpp"
#include "kinpar/parareal.hpp"

namespace kinpar {

enum class RunMode { Parareal, Fine, Fluid };

std::string_view to_string(RunMode mode);
RunMode parse_run_mode(std::string_view name);

enum class TauModel {
  Constant,  // tau = tau_scale
  Density,   // tau = tau_scale * rho
};

// Flat run description. A preset fills every field; explicit keys override.
struct RunConfig {
  std::optional<CaseName> preset;
  CaseName initial = CaseName::Sod;

  double x_min = 0.0;
  double x_max = 2.0;
  std::size_t n_x = 200;
  double v_max = 8.0;
  std::array<std::size_t, 3> n_v{32, 32, 32};
  BoundaryKind boundary = BoundaryKind::Absorbing;
  ForceKind force = ForceKind::None;

  double epsilon = 1e-2;
  TauModel tau_model = TauModel::Constant;
  double tau_scale = 1.0;
  double cfl_kinetic = 0.5;
  double cfl_fluid = 0.9;

  double t_final = 0.5;
  std::size_t n_g = 200;
  std::size_t n_f = 800;
  std::size_t k_max = 80;
  double tol = 1e-8;
  bool use_frozen_prefix = true;
  Schedule schedule = Schedule::Dynamic;
  unsigned workers = 1;

  std::string output_dir = "out";
  RunMode mode = RunMode::Parareal;

  static RunConfig from_preset(CaseName name);

  // Throws ConfigError on any constraint violation.
  void validate() const;
};

// Parses "key=value" lines; '#' starts a comment. Throws ParseError naming
// the offending key and line.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

PhaseGrid make_phase_grid(const RunConfig& config);
MultiscaleProblem make_problem(const RunConfig& config);
PararealConfig make_parareal_config(const RunConfig& config);

// Moments of the preset's initial distribution.
MomentField initial_moments(const RunConfig& config, const PhaseGrid& grid);

}  // namespace kinpar

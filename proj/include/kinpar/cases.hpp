#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kinpar/distribution.hpp"
#include "kinpar/grid.hpp"
#include "kinpar/moments.hpp"

namespace kinpar {

enum class CaseName { Sod, Blast, Beams };

std::string_view to_string(CaseName name);
CaseName parse_case_name(std::string_view name);

enum class ForceKind { None, Confining };

struct CasePreset {
  CaseName name = CaseName::Sod;
  double x_min = 0.0;
  double x_max = 2.0;
  std::size_t n_x = 200;
  double v_max = 8.0;
  std::array<std::size_t, 3> n_v{32, 32, 32};
  double epsilon = 1e-2;
  BoundaryKind boundary = BoundaryKind::Absorbing;
  ForceKind force = ForceKind::None;
  double t_final = 0.5;
  std::size_t n_g = 200;
  std::size_t n_f = 800;
  std::size_t k_max = 80;
  double tol = 1e-8;
};

CasePreset preset(CaseName name);

// E(x) = -5 x^4 (x - 2)^4 (x - 1): pushes mass toward x = 1 on [0, 2].
double external_force(double x);
std::vector<double> force_field(ForceKind kind, const SpatialGrid& grid);

// Piecewise-constant moment data of the Riemann presets.
MomentField sod_moments(const SpatialGrid& grid);
MomentField blast_moments(const SpatialGrid& grid);

Distribution sod_initial(const PhaseGrid& grid);
Distribution blast_initial(const PhaseGrid& grid);
// Two counter-streaming unit Maxwellians with ux = +1 and ux = -1.
Distribution beams_initial(const PhaseGrid& grid);

Distribution initial_distribution(CaseName name, const PhaseGrid& grid);

}  // namespace kinpar

#include "kinpar/cases.hpp"

#include <cmath>
#include <string>

#include "kinpar/errors.hpp"
#include "kinpar/lifting.hpp"

namespace kinpar {

std::string_view to_string(CaseName name) {
  switch (name) {
    case CaseName::Sod:
      return "sod";
    case CaseName::Blast:
      return "blast";
    case CaseName::Beams:
      return "beams";
  }
  return "unknown";
}

CaseName parse_case_name(std::string_view name) {
  if (name == "sod") return CaseName::Sod;
  if (name == "blast") return CaseName::Blast;
  if (name == "beams") return CaseName::Beams;
  throw ConfigError("unknown case '" + std::string(name) + "'");
}

CasePreset preset(CaseName name) {
  CasePreset p;
  p.name = name;
  switch (name) {
    case CaseName::Sod:
      break;
    case CaseName::Blast:
      p.k_max = 10;
      break;
    case CaseName::Beams:
      p.n_x = 100;
      p.n_v = {256, 16, 16};
      p.epsilon = 1e-5;
      p.boundary = BoundaryKind::Periodic;
      p.force = ForceKind::Confining;
      break;
  }
  return p;
}

double external_force(double x) {
  const double a = x * x;
  const double b = (x - 2.0) * (x - 2.0);
  return -5.0 * (a * a) * (b * b) * (x - 1.0);
}

std::vector<double> force_field(ForceKind kind, const SpatialGrid& grid) {
  if (kind == ForceKind::None) return {};
  std::vector<double> e(grid.n_x);
  for (std::size_t i = 0; i < grid.n_x; ++i) e[i] = external_force(grid.centers[i]);
  return e;
}

MomentField sod_moments(const SpatialGrid& grid) {
  MomentField U(grid.n_x);
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    const bool left = grid.centers[i] < 1.0;
    U.rho[i] = left ? 1.0 : 0.125;
    U.theta[i] = left ? 1.0 : 0.8;
  }
  return U;
}

MomentField blast_moments(const SpatialGrid& grid) {
  MomentField U(grid.n_x);
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    const double x = grid.centers[i];
    U.rho[i] = 1.0;
    if (x < 0.4) {
      U.u[i] = {1.0, 0.0, 0.0};
      U.theta[i] = 2.0;
    } else if (x < 1.6) {
      U.theta[i] = 0.25;
    } else {
      U.u[i] = {-1.0, 0.0, 0.0};
      U.theta[i] = 2.0;
    }
  }
  return U;
}

Distribution sod_initial(const PhaseGrid& grid) { return lift(sod_moments(grid.space), grid); }

Distribution blast_initial(const PhaseGrid& grid) {
  return lift(blast_moments(grid.space), grid);
}

Distribution beams_initial(const PhaseGrid& grid) {
  MomentField right(grid.n_x());
  MomentField left(grid.n_x());
  for (std::size_t i = 0; i < grid.n_x(); ++i) {
    right.rho[i] = left.rho[i] = 1.0;
    right.theta[i] = left.theta[i] = 1.0;
    right.u[i] = {1.0, 0.0, 0.0};
    left.u[i] = {-1.0, 0.0, 0.0};
  }
  Distribution f = lift(right, grid);
  const Distribution g = lift(left, grid);
  auto fv = f.values();
  auto gv = g.values();
  for (std::size_t k = 0; k < fv.size(); ++k) fv[k] += gv[k];
  return f;
}

Distribution initial_distribution(CaseName name, const PhaseGrid& grid) {
  switch (name) {
    case CaseName::Sod:
      return sod_initial(grid);
    case CaseName::Blast:
      return blast_initial(grid);
    case CaseName::Beams:
      return beams_initial(grid);
  }
  throw ConfigError("unknown case");
}

}  // namespace kinpar

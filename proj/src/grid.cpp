#include "kinpar/grid.hpp"

#include <cmath>
#include <string>

#include "kinpar/errors.hpp"

namespace kinpar {

std::string_view to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Absorbing:
      return "absorbing";
    case BoundaryKind::Periodic:
      return "periodic";
  }
  return "unknown";
}

BoundaryKind parse_boundary_kind(std::string_view name) {
  if (name == "absorbing") return BoundaryKind::Absorbing;
  if (name == "periodic") return BoundaryKind::Periodic;
  throw ConfigError("unknown boundary kind '" + std::string(name) + "'");
}

double VelocityAxis::largest_speed() const {
  // centers are odd-symmetric, so the extreme value sits at either end
  return centers.empty() ? 0.0 : std::abs(centers.back());
}

double TimeGrids::coarse_time(std::size_t n) const {
  if (n >= n_g) return t_final;
  return static_cast<double>(n) * dt_g;
}

SpatialGrid build_spatial_grid(double x_min, double x_max, std::size_t n_x) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
    throw ConfigError("spatial grid needs finite bounds with x_max > x_min");
  if (n_x < 2) throw ConfigError("spatial grid needs at least 2 cells");

  SpatialGrid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_x = n_x;
  g.dx = (x_max - x_min) / static_cast<double>(n_x);
  g.centers.resize(n_x);
  for (std::size_t i = 0; i < n_x; ++i)
    g.centers[i] = x_min + (static_cast<double>(i) + 0.5) * g.dx;
  return g;
}

VelocityAxis build_velocity_axis(double v_max, std::size_t n_v) {
  if (!std::isfinite(v_max) || !(v_max > 0.0))
    throw ConfigError("velocity bound must be positive and finite");
  if (n_v < 2) throw ConfigError("velocity axis needs at least 2 points");

  VelocityAxis a;
  a.v_max = v_max;
  a.n = n_v;
  a.dv = 2.0 * v_max / static_cast<double>(n_v);
  a.centers.assign(n_v, 0.0);
  for (std::size_t j = 0; j < n_v / 2; ++j) {
    const double c = -v_max + (static_cast<double>(j) + 0.5) * a.dv;
    a.centers[j] = c;
    a.centers[n_v - 1 - j] = -c;
  }
  return a;
}

VelocityGrid build_velocity_grid(double v_max, std::size_t n_v) {
  return build_velocity_grid(v_max, {n_v, n_v, n_v});
}

VelocityGrid build_velocity_grid(double v_max, std::array<std::size_t, 3> counts) {
  VelocityGrid g;
  for (std::size_t d = 0; d < 3; ++d) g.axes[d] = build_velocity_axis(v_max, counts[d]);
  return g;
}

TimeGrids build_time_grids(double t_final, std::size_t n_g, std::size_t n_f) {
  if (!std::isfinite(t_final) || !(t_final > 0.0))
    throw ConfigError("final time must be positive and finite");
  if (n_g < 1) throw ConfigError("need at least one coarse slice (n_g >= 1)");
  if (n_f < n_g) throw ConfigError("fine grid must be at least as fine as the coarse one (n_f >= n_g)");

  TimeGrids t;
  t.t_final = t_final;
  t.n_g = n_g;
  t.n_f = n_f;
  t.dt_g = t_final / static_cast<double>(n_g);
  t.dt_f = t_final / static_cast<double>(n_f);
  return t;
}

}  // namespace kinpar

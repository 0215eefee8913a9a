#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace kinpar {

enum class BoundaryKind { Absorbing, Periodic };

std::string_view to_string(BoundaryKind kind);
BoundaryKind parse_boundary_kind(std::string_view name);

// Uniform cell-centered partition of [x_min, x_max].
struct SpatialGrid {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t n_x = 0;
  double dx = 0.0;
  std::vector<double> centers;

  double length() const { return x_max - x_min; }
};

// One axis of the velocity cube: n midpoints of a uniform partition of
// [-v_max, v_max]. Centers are stored exactly odd-symmetric.
struct VelocityAxis {
  double v_max = 0.0;
  std::size_t n = 0;
  double dv = 0.0;
  std::vector<double> centers;

  // Largest |v| over the grid values (not the cube bound).
  double largest_speed() const;
};

struct VelocityGrid {
  std::array<VelocityAxis, 3> axes;

  const VelocityAxis& x() const { return axes[0]; }
  const VelocityAxis& y() const { return axes[1]; }
  const VelocityAxis& z() const { return axes[2]; }

  std::size_t size() const { return axes[0].n * axes[1].n * axes[2].n; }
  double cell_volume() const { return axes[0].dv * axes[1].dv * axes[2].dv; }
};

struct PhaseGrid {
  SpatialGrid space;
  VelocityGrid velocity;
  BoundaryKind boundary = BoundaryKind::Periodic;

  std::size_t n_x() const { return space.n_x; }
};

// Coarse (parareal slices) and fine (kinetic step cap) time grids on [0, t_final].
struct TimeGrids {
  double t_final = 0.0;
  std::size_t n_g = 0;
  std::size_t n_f = 0;
  double dt_g = 0.0;
  double dt_f = 0.0;

  // T^n; returns t_final exactly for n == n_g.
  double coarse_time(std::size_t n) const;
};

SpatialGrid build_spatial_grid(double x_min, double x_max, std::size_t n_x);

VelocityAxis build_velocity_axis(double v_max, std::size_t n_v);
VelocityGrid build_velocity_grid(double v_max, std::size_t n_v);
VelocityGrid build_velocity_grid(double v_max, std::array<std::size_t, 3> counts);

TimeGrids build_time_grids(double t_final, std::size_t n_g, std::size_t n_f);

}  // namespace kinpar

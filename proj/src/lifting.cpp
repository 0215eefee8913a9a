#include "kinpar/lifting.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "kinpar/errors.hpp"

namespace kinpar {

Distribution::Distribution(const PhaseGrid& grid, double fill)
    : n_x_(grid.n_x()),
      n_v_{grid.velocity.x().n, grid.velocity.y().n, grid.velocity.z().n},
      values_(grid.n_x() * grid.velocity.size(), fill) {}

bool Distribution::matches(const PhaseGrid& grid) const {
  return n_x_ == grid.n_x() && n_v_[0] == grid.velocity.x().n &&
         n_v_[1] == grid.velocity.y().n && n_v_[2] == grid.velocity.z().n;
}

double Distribution::total_mass(const PhaseGrid& grid) const {
  double acc = 0.0;
  for (double v : values_) acc += v;
  return acc * grid.velocity.cell_volume() * grid.space.dx;
}

double maxwellian(double rho, const Vec3& u, double theta, const Vec3& v) {
  if (!(theta > 0.0)) throw DegenerateStateError("Maxwellian needs a positive temperature");
  if (rho < 0.0) throw DegenerateStateError("Maxwellian needs a non-negative density");
  const double d0 = v[0] - u[0];
  const double d1 = v[1] - u[1];
  const double d2 = v[2] - u[2];
  const double norm = rho / std::pow(2.0 * std::numbers::pi * theta, 1.5);
  return norm * std::exp(-(d0 * d0 + d1 * d1 + d2 * d2) / (2.0 * theta));
}

namespace {

void gaussian_factors(const VelocityAxis& axis, double mean, double theta,
                      std::vector<double>& out, double& sum) {
  out.resize(axis.n);
  sum = 0.0;
  const double inv = 1.0 / (2.0 * theta);
  for (std::size_t j = 0; j < axis.n; ++j) {
    const double d = axis.centers[j] - mean;
    out[j] = std::exp(-d * d * inv);
    sum += out[j];
  }
}

}  // namespace

void lift_cell(double rho, const Vec3& u, double theta, const VelocityGrid& v,
               bool normalize_mass, std::span<double> out) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw DegenerateStateError("lifting needs a positive temperature");
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw DegenerateStateError("lifting needs a positive density");

  // The Maxwellian factorizes over the three velocity axes.
  std::vector<double> ex, ey, ez;
  double sx = 0.0, sy = 0.0, sz = 0.0;
  gaussian_factors(v.x(), u[0], theta, ex, sx);
  gaussian_factors(v.y(), u[1], theta, ey, sy);
  gaussian_factors(v.z(), u[2], theta, ez, sz);

  double scale = rho / std::pow(2.0 * std::numbers::pi * theta, 1.5);
  if (normalize_mass) {
    const double discrete = sx * sy * sz * v.cell_volume();
    if (!(discrete > 0.0))
      throw DegenerateStateError("discrete Maxwellian underflows on the velocity grid");
    scale = rho / discrete;
  }

  std::size_t idx = 0;
  for (std::size_t jx = 0; jx < ex.size(); ++jx) {
    const double a = scale * ex[jx];
    for (std::size_t jy = 0; jy < ey.size(); ++jy) {
      const double b = a * ey[jy];
      for (std::size_t jz = 0; jz < ez.size(); ++jz) out[idx++] = b * ez[jz];
    }
  }
}

Distribution lift(const MomentField& U, const PhaseGrid& grid, bool normalize_mass) {
  if (U.size() != grid.n_x()) throw ConfigError("moment field does not match the spatial grid");
  Distribution f(grid);
  for (std::size_t i = 0; i < grid.n_x(); ++i) {
    try {
      lift_cell(U.rho[i], U.u[i], U.theta[i], grid.velocity, normalize_mass, f.cell(i));
    } catch (const DegenerateStateError& e) {
      throw DegenerateStateError(std::string(e.what()) + " at cell " + std::to_string(i));
    }
  }
  return f;
}

}  // namespace kinpar

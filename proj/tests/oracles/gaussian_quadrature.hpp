#pragma once

// Independent 1D midpoint sums of a normalized Gaussian, written without the
// library so the lift/project path can be checked against them.

#include <cmath>
#include <cstddef>
#include <numbers>

namespace oracle {

struct Moments1D {
  double mass = 0.0;
  double first = 0.0;   // sum v g dv
  double second = 0.0;  // sum v^2 g dv
};

inline Moments1D midpoint_gaussian(double mean, double sigma, double v_max, std::size_t n) {
  Moments1D m;
  const double dv = 2.0 * v_max / static_cast<double>(n);
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t j = 0; j < n; ++j) {
    const double v = -v_max + (static_cast<double>(j) + 0.5) * dv;
    const double g = norm * std::exp(-(v - mean) * (v - mean) / (2.0 * sigma * sigma)) * dv;
    m.mass += g;
    m.first += v * g;
    m.second += v * v * g;
  }
  return m;
}

inline double midpoint_gaussian_mass(double mean, double sigma, double v_max, std::size_t n) {
  return midpoint_gaussian(mean, sigma, v_max, n).mass;
}

struct ProjectedMaxwellian {
  double rho, ux, theta;
};

// Discrete moments of the pointwise Maxwellian (rho, (ux,0,0), theta) on the
// cube [-v_max, v_max]^3 with n points per axis, via the product structure.
inline ProjectedMaxwellian project_lifted(double rho, double ux, double theta, double v_max,
                                          std::size_t n) {
  const double s = std::sqrt(theta);
  const Moments1D x = midpoint_gaussian(ux, s, v_max, n);
  const Moments1D t = midpoint_gaussian(0.0, s, v_max, n);
  ProjectedMaxwellian p;
  p.rho = rho * x.mass * t.mass * t.mass;
  p.ux = x.first / x.mass;
  // sum |v - u|^2 f over the cube, divided by 3 rho
  const double var_x = x.second / x.mass - p.ux * p.ux;
  const double var_t = t.second / t.mass;
  p.theta = (var_x + 2.0 * var_t) / 3.0;
  return p;
}

}  // namespace oracle

#include "kinpar/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kinpar/errors.hpp"

namespace kinpar {

namespace {

// Sum of v_j * s_j over an odd-symmetric axis, pairing mirrored nodes so that
// mirror-symmetric marginals give exactly zero.
double odd_moment(const std::vector<double>& v, const std::vector<double>& s) {
  const std::size_t n = v.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < n / 2; ++j) acc += v[j] * (s[j] - s[n - 1 - j]);
  return acc;
}

double centered_second_moment(const std::vector<double>& v, const std::vector<double>& s,
                              double mean) {
  double acc = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double d = v[j] - mean;
    acc += d * d * s[j];
  }
  return acc;
}

}  // namespace

double MomentField::component(std::size_t i, std::size_t c) const {
  switch (c) {
    case 0:
      return rho[i];
    case 4:
      return theta[i];
    default:
      return u[i][c - 1];
  }
}

double& MomentField::component(std::size_t i, std::size_t c) {
  switch (c) {
    case 0:
      return rho[i];
    case 4:
      return theta[i];
    default:
      return u[i][c - 1];
  }
}

CellMoments project_cell(std::span<const double> f, const VelocityGrid& v) {
  const auto& ax = v.x();
  const auto& ay = v.y();
  const auto& az = v.z();

  // Marginal sums along each axis; the theta integral separates over them.
  std::vector<double> sx(ax.n, 0.0), sy(ay.n, 0.0), sz(az.n, 0.0);
  std::size_t idx = 0;
  for (std::size_t jx = 0; jx < ax.n; ++jx) {
    double plane = 0.0;
    for (std::size_t jy = 0; jy < ay.n; ++jy) {
      double line = 0.0;
      for (std::size_t jz = 0; jz < az.n; ++jz, ++idx) {
        line += f[idx];
        sz[jz] += f[idx];
      }
      sy[jy] += line;
      plane += line;
    }
    sx[jx] = plane;
  }

  double mass = 0.0;
  for (double s : sx) mass += s;
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw DegenerateStateError("non-positive or non-finite discrete mass in projection");

  const double w = v.cell_volume();
  CellMoments m;
  m.rho = mass * w;
  m.u = {odd_moment(ax.centers, sx) / mass, odd_moment(ay.centers, sy) / mass,
         odd_moment(az.centers, sz) / mass};
  const double second = centered_second_moment(ax.centers, sx, m.u[0]) +
                        centered_second_moment(ay.centers, sy, m.u[1]) +
                        centered_second_moment(az.centers, sz, m.u[2]);
  m.theta = second / (3.0 * mass);
  return m;
}

MomentField project(const Distribution& f, const PhaseGrid& grid) {
  if (!f.matches(grid)) throw ConfigError("distribution does not match the phase grid");
  MomentField U(grid.n_x());
  for (std::size_t i = 0; i < grid.n_x(); ++i) {
    CellMoments m;
    try {
      m = project_cell(f.cell(i), grid.velocity);
    } catch (const DegenerateStateError& e) {
      throw DegenerateStateError(std::string(e.what()) + " at cell " + std::to_string(i));
    }
    U.rho[i] = m.rho;
    U.u[i] = m.u;
    U.theta[i] = m.theta;
  }
  return U;
}

ConservedField primitive_to_conserved(const MomentField& U) {
  ConservedField V(U.size());
  for (std::size_t i = 0; i < U.size(); ++i) {
    const double r = U.rho[i];
    const Vec3& u = U.u[i];
    V.rho[i] = r;
    V.mom[i] = {r * u[0], r * u[1], r * u[2]};
    const double u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    V.energy[i] = 0.5 * (r * u2 + 3.0 * r * U.theta[i]);
  }
  return V;
}

MomentField conserved_to_primitive(const ConservedField& V) {
  MomentField U(V.size());
  for (std::size_t i = 0; i < V.size(); ++i) {
    const double r = V.rho[i];
    if (!(r > 0.0) || !std::isfinite(r))
      throw DegenerateStateError("non-positive density at cell " + std::to_string(i));
    const Vec3& m = V.mom[i];
    const Vec3 u{m[0] / r, m[1] / r, m[2] / r};
    const double internal = 2.0 * V.energy[i] - r * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    if (!(internal > 0.0) || !std::isfinite(internal))
      throw DegenerateStateError("non-positive internal energy at cell " + std::to_string(i));
    U.rho[i] = r;
    U.u[i] = u;
    U.theta[i] = internal / (3.0 * r);
  }
  return U;
}

namespace {

template <class Op>
MomentField combine(const MomentField& a, const MomentField& b, Op op) {
  if (a.size() != b.size()) throw ConfigError("moment fields differ in size");
  MomentField r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.rho[i] = op(a.rho[i], b.rho[i]);
    for (std::size_t d = 0; d < 3; ++d) r.u[i][d] = op(a.u[i][d], b.u[i][d]);
    r.theta[i] = op(a.theta[i], b.theta[i]);
  }
  return r;
}

}  // namespace

MomentField operator+(const MomentField& a, const MomentField& b) {
  return combine(a, b, [](double x, double y) { return x + y; });
}

MomentField operator-(const MomentField& a, const MomentField& b) {
  return combine(a, b, [](double x, double y) { return x - y; });
}

std::array<double, 5> component_max_abs_difference(const MomentField& a, const MomentField& b) {
  if (a.size() != b.size()) throw ConfigError("moment fields differ in size");
  std::array<double, 5> out{};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < MomentField::kComponents; ++c)
      out[c] = std::max(out[c], std::abs(a.component(i, c) - b.component(i, c)));
  return out;
}

double max_abs_difference(const MomentField& a, const MomentField& b) {
  const auto c = component_max_abs_difference(a, b);
  return *std::max_element(c.begin(), c.end());
}

std::size_t first_invalid_cell(const MomentField& U) {
  for (std::size_t i = 0; i < U.size(); ++i) {
    const bool finite = std::isfinite(U.rho[i]) && std::isfinite(U.theta[i]) &&
                        std::isfinite(U.u[i][0]) && std::isfinite(U.u[i][1]) &&
                        std::isfinite(U.u[i][2]);
    if (!finite || !(U.rho[i] > 0.0) || !(U.theta[i] > 0.0)) return i;
  }
  return U.size();
}

}  // namespace kinpar

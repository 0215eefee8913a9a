#include "kinpar/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kinpar/errors.hpp"

namespace kinpar {

namespace {

struct Primitive {
  double rho;
  double ux, uy, uz;
  double pressure;  // rho * theta
};

Primitive primitive_of(const EulerState& V) {
  const double rho = V[0];
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DegenerateStateError("non-positive density");
  const double ux = V[1] / rho;
  const double uy = V[2] / rho;
  const double uz = V[3] / rho;
  const double pressure = (2.0 * V[4] - rho * (ux * ux + uy * uy + uz * uz)) / 3.0;
  if (!(pressure > 0.0) || !std::isfinite(pressure))
    throw DegenerateStateError("non-positive internal energy");
  return {rho, ux, uy, uz, pressure};
}

}  // namespace

void FluidParams::validate(const PhaseGrid& grid) const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("fluid CFL factor must lie in (0, 1]");
  if (!force.empty() && force.size() != grid.n_x())
    throw ConfigError("force field length differs from the number of cells");
}

EulerState euler_flux(const EulerState& V) {
  const Primitive p = primitive_of(V);
  return {V[1], V[1] * p.ux + p.pressure, V[1] * p.uy, V[1] * p.uz, p.ux * (V[4] + p.pressure)};
}

EulerState half_range_flux(const EulerState& V, int side) {
  const Primitive p = primitive_of(V);
  const double theta = p.pressure / p.rho;
  const double c = std::sqrt(theta);
  const double u = side * p.ux;
  const double a = 0.5 * std::erfc(-u / (c * std::sqrt(2.0)));
  const double b = std::exp(-u * u / (2.0 * theta)) / std::sqrt(2.0 * std::numbers::pi);
  // moments of order 1, 2, 3 of the 1D Gaussian over the half line s v > 0
  const double m1 = u * a + c * b;
  const double m2 = (u * u + theta) * a + u * c * b;
  const double m3 = (u * u * u + 3.0 * u * theta) * a + c * (u * u + 2.0 * theta) * b;
  const double transverse = p.uy * p.uy + p.uz * p.uz + 2.0 * theta;
  const double s = side;
  return {s * p.rho * m1, p.rho * m2, s * p.rho * p.uy * m1, s * p.rho * p.uz * m1,
          s * 0.5 * p.rho * (m3 + transverse * m1)};
}

double max_wave_speed(const EulerState& V) {
  const Primitive p = primitive_of(V);
  return std::abs(p.ux) + std::sqrt(p.pressure / p.rho);
}

EulerState rusanov_flux(const EulerState& left, const EulerState& right) {
  const EulerState hl = euler_flux(left);
  const EulerState hr = euler_flux(right);
  const double s = std::max(max_wave_speed(left), max_wave_speed(right));
  EulerState h;
  for (std::size_t c = 0; c < 5; ++c) h[c] = 0.5 * (hl[c] + hr[c]) - 0.5 * s * (right[c] - left[c]);
  return h;
}

double stable_dt_fluid(const MomentField& U, const PhaseGrid& grid, const FluidParams& params) {
  double s_max = 0.0;
  for (std::size_t i = 0; i < U.size(); ++i)
    s_max = std::max(s_max, std::abs(U.u[i][0]) + std::sqrt(U.theta[i]));
  if (!(s_max > 0.0) || !std::isfinite(s_max))
    throw DegenerateStateError("fluid state has no finite positive wave speed");
  return params.cfl * grid.space.dx / s_max;
}

std::vector<EulerState> to_states(const ConservedField& V) {
  std::vector<EulerState> s(V.size());
  for (std::size_t i = 0; i < V.size(); ++i)
    s[i] = {V.rho[i], V.mom[i][0], V.mom[i][1], V.mom[i][2], V.energy[i]};
  return s;
}

ConservedField from_states(const std::vector<EulerState>& states) {
  ConservedField V(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    V.rho[i] = states[i][0];
    V.mom[i] = {states[i][1], states[i][2], states[i][3]};
    V.energy[i] = states[i][4];
  }
  return V;
}

MomentField propagate_fluid(const MomentField& U0, double t0, double t1, double max_dt,
                            const PhaseGrid& grid, const FluidParams& params) {
  if (!(t1 >= t0)) throw ConfigError("fluid propagation needs t1 >= t0");
  if (!(max_dt > 0.0)) throw ConfigError("fluid step cap must be positive");
  if (U0.size() != grid.n_x()) throw ConfigError("moment field does not match the spatial grid");
  params.validate(grid);
  if (first_invalid_cell(U0) != U0.size())
    throw DegenerateStateError("fluid initial state has non-positive density or temperature");
  if (t1 == t0) return U0;

  const std::size_t n = grid.n_x();
  const bool periodic = grid.boundary == BoundaryKind::Periodic;
  const double dx = grid.space.dx;

  std::vector<EulerState> V = to_states(primitive_to_conserved(U0));
  std::vector<EulerState> faces(n + 1);
  double t = t0;
  std::size_t step = 0;
  while (t < t1) {
    ++step;
    double dt = 0.0;
    try {
      double s_max = 0.0;
      for (const auto& v : V) s_max = std::max(s_max, max_wave_speed(v));
      const double cap = std::min(params.cfl * dx / s_max, max_dt);
      const double remaining = t1 - t;
      const bool last = remaining <= cap * (1.0 + 1e-10);
      dt = last ? remaining : cap;

      // faces[i] is the interface between cells i-1 and i.
      for (std::size_t i = 1; i < n; ++i) faces[i] = rusanov_flux(V[i - 1], V[i]);
      if (periodic) {
        faces[0] = rusanov_flux(V[n - 1], V[0]);
        faces[n] = faces[0];
      } else {
        faces[0] = half_range_flux(V[0], -1);
        faces[n] = half_range_flux(V[n - 1], +1);
      }
      t = last ? t1 : t + dt;
    } catch (const DegenerateStateError& e) {
      throw BlowUpError(std::string("fluid solver: ") + e.what(), step);
    }

    const double lx = dt / dx;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = params.force_at(i);
      EulerState& v = V[i];
      const double rho = v[0];
      const double mom_x = v[1];
      for (std::size_t c = 0; c < 5; ++c) v[c] -= lx * (faces[i + 1][c] - faces[i][c]);
      if (e != 0.0) {
        v[1] += dt * rho * e;
        v[4] += dt * mom_x * e;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = V[i];
      const double internal =
          2.0 * v[4] - (v[1] * v[1] + v[2] * v[2] + v[3] * v[3]) / v[0];
      if (!(v[0] > 0.0) || !(internal > 0.0) || !std::isfinite(internal))
        throw BlowUpError("fluid solver: non-physical state at cell " + std::to_string(i), step);
    }
  }
  return conserved_to_primitive(from_states(V));
}

}  // namespace kinpar

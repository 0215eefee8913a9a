#include "kinpar/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "kinpar/errors.hpp"
#include "kinpar/lifting.hpp"
#include "kinpar/moments.hpp"

namespace kinpar {

RelaxationRate constant_rate(double tau) {
  return [tau](double, double) { return tau; };
}

double KineticParams::max_force() const {
  double m = 0.0;
  for (double e : force) m = std::max(m, std::abs(e));
  return m;
}

void KineticParams::validate(const PhaseGrid& grid) const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw ConfigError("Knudsen number must be positive");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("kinetic CFL factor must lie in (0, 1]");
  if (!tau) throw ConfigError("relaxation rate is not set");
  if (!force.empty() && force.size() != grid.n_x())
    throw ConfigError("force field length differs from the number of cells");
  for (double e : force)
    if (!std::isfinite(e)) throw ConfigError("force field has non-finite entries");
}

double stable_dt_kinetic(const PhaseGrid& grid, const KineticParams& params) {
  const double rate = grid.velocity.x().largest_speed() / grid.space.dx +
                      params.max_force() / grid.velocity.x().dv;
  return params.cfl / rate;
}

void transport_update(const Distribution& f, double dt, const PhaseGrid& grid,
                      const KineticParams& params, Distribution& out) {
  const std::size_t n_x = grid.n_x();
  const auto& vx = grid.velocity.x();
  const std::size_t block = grid.velocity.y().n * grid.velocity.z().n;
  const std::size_t cell = f.cell_size();
  const double lx = dt / grid.space.dx;
  const double lv = dt / vx.dv;
  const double e_max = params.max_force();
  const bool periodic = grid.boundary == BoundaryKind::Periodic;

  if (!out.matches(grid)) out = Distribution(grid);
  const std::vector<double> vacuum(cell, 0.0);

  for (std::size_t i = 0; i < n_x; ++i) {
    const double* fi = f.cell(i).data();
    const double* fl = i > 0 ? f.cell(i - 1).data()
                             : (periodic ? f.cell(n_x - 1).data() : vacuum.data());
    const double* fr = i + 1 < n_x ? f.cell(i + 1).data()
                                   : (periodic ? f.cell(0).data() : vacuum.data());
    double* o = out.cell(i).data();

    // Upwind flux in x: F_{i+1/2} = v+ f_i - v- f_{i+1}.
    for (std::size_t jx = 0; jx < vx.n; ++jx) {
      const double v = vx.centers[jx];
      const double vp = std::max(v, 0.0);
      const double vm = -std::min(v, 0.0);
      const std::size_t base = jx * block;
      for (std::size_t m = base; m < base + block; ++m) {
        const double flux_right = vp * fi[m] - vm * fr[m];
        const double flux_left = vp * fl[m] - vm * fi[m];
        o[m] = fi[m] - lx * (flux_right - flux_left);
      }
    }

    // Rusanov flux in v_x, zero at the cube faces.
    const double e = params.force_at(i);
    if (e == 0.0 && e_max == 0.0) continue;
    for (std::size_t jx = 0; jx + 1 < vx.n; ++jx) {
      const double* lo = fi + jx * block;
      const double* hi = lo + block;
      double* o_lo = o + jx * block;
      double* o_hi = o_lo + block;
      for (std::size_t m = 0; m < block; ++m) {
        const double g = 0.5 * e * (lo[m] + hi[m]) - 0.5 * e_max * (hi[m] - lo[m]);
        o_lo[m] -= lv * g;
        o_hi[m] += lv * g;
      }
    }
  }
}

Distribution transport_update(const Distribution& f, double dt, const PhaseGrid& grid,
                              const KineticParams& params) {
  Distribution out(grid);
  transport_update(f, dt, grid, params, out);
  return out;
}

void bgk_relax_in_place(Distribution& f_star, double dt, const PhaseGrid& grid,
                        const KineticParams& params) {
  std::vector<double> equilibrium(f_star.cell_size());
  for (std::size_t i = 0; i < grid.n_x(); ++i) {
    auto f = f_star.cell(i);
    CellMoments m;
    try {
      m = project_cell(f, grid.velocity);
    } catch (const DegenerateStateError& e) {
      throw DegenerateStateError(std::string(e.what()) + " at cell " + std::to_string(i));
    }
    if (!(m.theta > 0.0) || !std::isfinite(m.theta))
      throw DegenerateStateError("non-positive temperature at cell " + std::to_string(i));
    const double tau = params.tau(m.rho, m.theta);
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw DegenerateStateError("non-positive relaxation rate at cell " + std::to_string(i));

    lift_cell(m.rho, m.u, m.theta, grid.velocity, true, equilibrium);
    const double lambda = dt * tau / params.epsilon;
    const double keep = 1.0 / (1.0 + lambda);
    const double relax = lambda / (1.0 + lambda);
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = keep * f[j] + relax * equilibrium[j];
  }
}

Distribution bgk_relax(Distribution f_star, double dt, const PhaseGrid& grid,
                       const KineticParams& params) {
  bgk_relax_in_place(f_star, dt, grid, params);
  return f_star;
}

namespace {

bool all_finite(const Distribution& f) {
  double acc = 0.0;
  for (double v : f.values()) acc += v;
  return std::isfinite(acc);
}

}  // namespace

Distribution propagate_kinetic(const Distribution& f0, double t0, double t1, double max_dt,
                               const PhaseGrid& grid, const KineticParams& params,
                               const KineticObserver& observer) {
  if (!(t1 >= t0)) throw ConfigError("kinetic propagation needs t1 >= t0");
  if (!(max_dt > 0.0)) throw ConfigError("kinetic step cap must be positive");
  if (!f0.matches(grid)) throw ConfigError("distribution does not match the phase grid");
  params.validate(grid);

  Distribution f = f0;
  if (t1 == t0) return f;

  const double cap = std::min(stable_dt_kinetic(grid, params), max_dt);
  Distribution scratch(grid);
  double t = t0;
  std::size_t step = 0;
  while (t < t1) {
    const double remaining = t1 - t;
    const bool last = remaining <= cap * (1.0 + 1e-10);
    const double dt = last ? remaining : cap;
    ++step;
    transport_update(f, dt, grid, params, scratch);
    try {
      bgk_relax_in_place(scratch, dt, grid, params);
    } catch (const DegenerateStateError& e) {
      throw BlowUpError(std::string("kinetic solver: ") + e.what(), step);
    }
    if (!all_finite(scratch)) throw BlowUpError("kinetic solver: non-finite values", step);
    std::swap(f, scratch);
    t = last ? t1 : t + dt;
    if (observer) observer(step, t, dt, f);
  }
  return f;
}

}  // namespace kinpar

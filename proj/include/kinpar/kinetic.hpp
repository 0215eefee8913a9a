#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kinpar/distribution.hpp"
#include "kinpar/grid.hpp"

namespace kinpar {

// Relaxation rate tau(rho, theta) of the BGK operator.
using RelaxationRate = std::function<double(double rho, double theta)>;

RelaxationRate constant_rate(double tau = 1.0);

struct KineticParams {
  double epsilon = 1.0;                  // Knudsen number
  RelaxationRate tau = constant_rate();  // must be > 0 on valid states
  std::vector<double> force;             // E_i (x-component) per cell; empty means zero
  double cfl = 0.5;

  double force_at(std::size_t i) const { return force.empty() ? 0.0 : force[i]; }
  double max_force() const;
  void validate(const PhaseGrid& grid) const;
};

// cfl / (max|v_x| / dx + max|E| / dv_x).
double stable_dt_kinetic(const PhaseGrid& grid, const KineticParams& params);

// Explicit transport step: upwind flux in x, Rusanov flux in v_x, zero flux
// at the velocity cube faces, spatial ghosts per grid.boundary.
void transport_update(const Distribution& f, double dt, const PhaseGrid& grid,
                      const KineticParams& params, Distribution& out);
Distribution transport_update(const Distribution& f, double dt, const PhaseGrid& grid,
                              const KineticParams& params);

// Implicit BGK relaxation toward the mass-normalized Maxwellian of f_star's
// own moments, computed in place.
void bgk_relax_in_place(Distribution& f_star, double dt, const PhaseGrid& grid,
                        const KineticParams& params);
Distribution bgk_relax(Distribution f_star, double dt, const PhaseGrid& grid,
                       const KineticParams& params);

// Called after every completed step with (step index from 1, time reached,
// step size used, state).
using KineticObserver =
    std::function<void(std::size_t step, double t, double dt, const Distribution& f)>;

// Advances f0 from t0 to t1 with steps min(stable_dt, max_dt, remaining).
// Throws BlowUpError carrying the failing step index.
Distribution propagate_kinetic(const Distribution& f0, double t0, double t1, double max_dt,
                               const PhaseGrid& grid, const KineticParams& params,
                               const KineticObserver& observer = {});

}  // namespace kinpar

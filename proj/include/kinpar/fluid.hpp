#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kinpar/grid.hpp"
#include "kinpar/moments.hpp"

namespace kinpar {

// Conserved state of one cell: (rho, rho ux, rho uy, rho uz, E).
using EulerState = std::array<double, 5>;

struct FluidParams {
  std::vector<double> force;  // E_i per cell; empty means zero
  double cfl = 0.9;

  double force_at(std::size_t i) const { return force.empty() ? 0.0 : force[i]; }
  void validate(const PhaseGrid& grid) const;
};

// Physical x-flux of the monoatomic Euler system.
EulerState euler_flux(const EulerState& V);

// Local Lax-Friedrichs (Rusanov) interface flux with S = max(|ux| + sqrt(theta)).
EulerState rusanov_flux(const EulerState& left, const EulerState& right);

// Flux carried by the velocities of sign `side` (+1 or -1) of the Maxwellian
// of V. The two halves sum to euler_flux(V).
EulerState half_range_flux(const EulerState& V, int side);
double max_wave_speed(const EulerState& V);

double stable_dt_fluid(const MomentField& U, const PhaseGrid& grid, const FluidParams& params);

std::vector<EulerState> to_states(const ConservedField& V);
ConservedField from_states(const std::vector<EulerState>& states);

// Explicit finite-volume Euler solve from t0 to t1 with steps
// min(stable_dt, max_dt, remaining) and the unsplit force source
// (0, rho E, 0, 0, rho ux E). At absorbing walls only the outgoing
// half-range flux of the boundary cell leaves and nothing enters.
MomentField propagate_fluid(const MomentField& U0, double t0, double t1, double max_dt,
                            const PhaseGrid& grid, const FluidParams& params);

}  // namespace kinpar

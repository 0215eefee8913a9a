#pragma once

#include "kinpar/distribution.hpp"
#include "kinpar/grid.hpp"
#include "kinpar/moments.hpp"

namespace kinpar {

// rho / (2 pi theta)^{3/2} exp(-|v - u|^2 / (2 theta)).
double maxwellian(double rho, const Vec3& u, double theta, const Vec3& v);

// Writes the pointwise Maxwellian of (rho, u, theta) on the velocity grid into
// `out`. With normalize_mass the values are rescaled so that the discrete
// mass sum(out) * dv^3 equals rho.
void lift_cell(double rho, const Vec3& u, double theta, const VelocityGrid& v,
               bool normalize_mass, std::span<double> out);

// Discrete lifting L: the pointwise Maxwellian of each cell's moments.
Distribution lift(const MomentField& U, const PhaseGrid& grid, bool normalize_mass = false);

}  // namespace kinpar

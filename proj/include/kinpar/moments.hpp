#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kinpar/distribution.hpp"
#include "kinpar/grid.hpp"

namespace kinpar {

using Vec3 = std::array<double, 3>;

// Primitive fluid state (rho, u, theta) per spatial cell. This is also the
// parareal unknown; jumps between propagators are stored in the same shape
// and may hold negative entries.
struct MomentField {
  std::vector<double> rho;
  std::vector<Vec3> u;
  std::vector<double> theta;

  MomentField() = default;
  explicit MomentField(std::size_t n_x) : rho(n_x, 0.0), u(n_x, Vec3{}), theta(n_x, 0.0) {}

  std::size_t size() const { return rho.size(); }

  // Component c of cell i in the order (rho, ux, uy, uz, theta).
  double component(std::size_t i, std::size_t c) const;
  double& component(std::size_t i, std::size_t c);

  static constexpr std::size_t kComponents = 5;
};

// Conserved variables (rho, rho u, E) with E = (rho |u|^2 + 3 rho theta) / 2.
struct ConservedField {
  std::vector<double> rho;
  std::vector<Vec3> mom;
  std::vector<double> energy;

  ConservedField() = default;
  explicit ConservedField(std::size_t n_x)
      : rho(n_x, 0.0), mom(n_x, Vec3{}), energy(n_x, 0.0) {}

  std::size_t size() const { return rho.size(); }
};

// Velocity moments of one cell: first-order (midpoint) quadrature, u first,
// then theta about the discrete u.
struct CellMoments {
  double rho = 0.0;
  Vec3 u{};
  double theta = 0.0;
};

// Throws DegenerateStateError if the cell has non-positive discrete mass.
CellMoments project_cell(std::span<const double> f, const VelocityGrid& v);

// Discrete projection P.
MomentField project(const Distribution& f, const PhaseGrid& grid);

ConservedField primitive_to_conserved(const MomentField& U);
MomentField conserved_to_primitive(const ConservedField& V);

// Componentwise arithmetic in primitive variables.
MomentField operator+(const MomentField& a, const MomentField& b);
MomentField operator-(const MomentField& a, const MomentField& b);

// Sup-norm over cells of |a - b| per component (rho, ux, uy, uz, theta).
std::array<double, 5> component_max_abs_difference(const MomentField& a, const MomentField& b);
double max_abs_difference(const MomentField& a, const MomentField& b);

// Index of the first cell with rho <= 0, theta <= 0 or a non-finite entry,
// or size() when the field is physically valid.
std::size_t first_invalid_cell(const MomentField& U);

}  // namespace kinpar

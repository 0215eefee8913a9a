#include <doctest.h>

#include <cmath>
#include <random>

#include "kinpar/cases.hpp"
#include "kinpar/errors.hpp"
#include "kinpar/fluid.hpp"
#include "kinpar/moments.hpp"
#include "oracles/riemann_exact.hpp"

using namespace kinpar;

namespace {

PhaseGrid line(std::size_t n_x, BoundaryKind bc, double x_max = 2.0) {
  return PhaseGrid{build_spatial_grid(0.0, x_max, n_x), build_velocity_grid(8.0, 2), bc};
}

EulerState state(double rho, double ux, double theta) {
  return {rho, rho * ux, 0.0, 0.0, 0.5 * (rho * ux * ux + 3.0 * rho * theta)};
}

std::array<double, 3> conserved_totals(const MomentField& U, double dx) {
  const auto V = primitive_to_conserved(U);
  std::array<double, 3> t{};
  for (std::size_t i = 0; i < V.size(); ++i) {
    t[0] += V.rho[i] * dx;
    t[1] += V.mom[i][0] * dx;
    t[2] += V.energy[i] * dx;
  }
  return t;
}

// L1 density error over [0.5, 1.5], which holds the whole Riemann fan for
// t <= 0.1. Outside it the absorbing walls drain mass, which the
// unbounded-domain solution does not describe.
double sod_l1_error(double t) {
  const auto grid = line(200, BoundaryKind::Absorbing);
  const auto U = propagate_fluid(sod_moments(grid.space), 0.0, t, t, grid, FluidParams{});
  const oracle::ExactRiemann exact({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 5.0 / 3.0);
  REQUIRE(exact.sample(-0.5 / t).rho == 1.0);
  REQUIRE(exact.sample(0.5 / t).rho == 0.125);
  double err = 0.0;
  for (std::size_t i = 0; i < U.size(); ++i) {
    const double x = grid.space.centers[i];
    if (x < 0.5 || x > 1.5) continue;
    err += std::abs(U.rho[i] - exact.sample((x - 1.0) / t).rho) * grid.space.dx;
  }
  return err;
}

}  // namespace

TEST_CASE("riemann oracle reproduces the classic air shock tube") {
  const oracle::ExactRiemann air({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4);
  CHECK(air.star_pressure() == doctest::Approx(0.30313).epsilon(1e-4));
  CHECK(air.star_velocity() == doctest::Approx(0.92745).epsilon(1e-4));
}

TEST_CASE("euler flux examples") {
  auto h = euler_flux(state(1.0, 0.0, 1.0));
  CHECK(h == EulerState{0.0, 1.0, 0.0, 0.0, 0.0});
  h = euler_flux(state(1.0, 1.0, 2.0));
  CHECK(h[0] == 1.0);
  CHECK(h[1] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(h[4] == doctest::Approx(5.5).epsilon(1e-15));
  h = euler_flux(state(0.125, 0.0, 0.8));
  CHECK(h[1] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(h[0] == 0.0);
  CHECK(h[4] == 0.0);
  CHECK_THROWS_AS(euler_flux(EulerState{1.0, 0.0, 0.0, 0.0, 0.0}), DegenerateStateError);
}

TEST_CASE("rusanov flux") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> val(0.1, 2.0);
  for (int k = 0; k < 50; ++k) {
    EulerState V = state(val(rng), val(rng) - 1.0, val(rng));
    V[2] = 0.3 * V[0];
    V[4] += 0.5 * 0.09 * V[0];
    CHECK(rusanov_flux(V, V) == euler_flux(V));
  }
  const auto L = state(1.0, 0.0, 1.0);
  const auto R = state(0.125, 0.0, 0.8);
  CHECK(max_wave_speed(L) == 1.0);
  CHECK(max_wave_speed(R) == doctest::Approx(std::sqrt(0.8)).epsilon(1e-15));
  const auto H = rusanov_flux(L, R);
  // S = 1 so the density flux is -0.5 (0.125 - 1)
  CHECK(H[0] == doctest::Approx(0.4375).epsilon(1e-15));

  const auto A = state(0.7, 0.4, 1.3), B = state(0.7, -0.4, 1.3);
  CHECK(rusanov_flux(A, B)[0] == 0.0);
  CHECK(rusanov_flux(B, A)[0] == 0.0);
}

TEST_CASE("half-range fluxes") {
  const EulerState V{0.9, 0.9 * 0.4, 0.9 * -0.3, 0.9 * 0.2,
                     0.5 * 0.9 * (0.16 + 0.09 + 0.04) + 1.5 * 0.9 * 0.7};
  const auto plus = half_range_flux(V, +1);
  const auto minus = half_range_flux(V, -1);
  const auto full = euler_flux(V);
  for (std::size_t c = 0; c < 5; ++c) CHECK(plus[c] + minus[c] == doctest::Approx(full[c]).epsilon(1e-13));
  CHECK(plus[0] > 0.0);
  CHECK(minus[0] < 0.0);

  // brute-force quadrature of the outgoing Maxwellian moments
  const double rho = 0.9, ux = 0.4, uy = -0.3, uz = 0.2, theta = 0.7;
  const std::size_t m = 200000;
  const double v_hi = ux + 12.0 * std::sqrt(theta), dv = v_hi / static_cast<double>(m);
  EulerState q{};
  for (std::size_t j = 0; j < m; ++j) {
    const double v = (static_cast<double>(j) + 0.5) * dv;
    const double g = rho * std::exp(-(v - ux) * (v - ux) / (2 * theta)) / std::sqrt(2 * M_PI * theta) * dv;
    q[0] += v * g;
    q[1] += v * v * g;
    q[2] += uy * v * g;
    q[3] += uz * v * g;
    q[4] += 0.5 * v * (v * v + uy * uy + uz * uz + 2 * theta) * g;
  }
  for (std::size_t c = 0; c < 5; ++c) CHECK(plus[c] == doctest::Approx(q[c]).epsilon(1e-8));
}

TEST_CASE("absorbing walls only let mass out") {
  const auto grid = line(20, BoundaryKind::Absorbing);
  MomentField U(20);
  for (std::size_t i = 0; i < 20; ++i) {
    U.rho[i] = 1.0;
    U.theta[i] = 1.0;
  }
  const auto out = propagate_fluid(U, 0.0, 0.2, 0.05, grid, FluidParams{});
  CHECK(out.rho[0] < 1.0);
  CHECK(out.rho[19] < 1.0);
  CHECK(out.u[0][0] < 0.0);
  CHECK(out.u[19][0] > 0.0);
  CHECK(std::abs(out.rho[10] - 1.0) <= 1e-12);
}

TEST_CASE("stable dt examples") {
  FluidParams p;
  const auto grid = line(200, BoundaryKind::Absorbing);
  const auto sod = sod_moments(grid.space);
  CHECK(stable_dt_fluid(sod, grid, p) == doctest::Approx(9e-3).epsilon(1e-14));

  const auto two = line(2, BoundaryKind::Periodic, 1.0);
  MomentField U(2);
  U.rho = {1.0, 1.0};
  U.theta = {1.0, 1.0};
  CHECK(stable_dt_fluid(U, two, p) == doctest::Approx(0.45).epsilon(1e-15));
  U.theta = {2.0, 2.0};
  CHECK(stable_dt_fluid(U, two, p) == doctest::Approx(0.45 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("constant state is preserved") {
  const auto grid = line(16, BoundaryKind::Periodic);
  MomentField U(16);
  for (std::size_t i = 0; i < 16; ++i) {
    U.rho[i] = 0.8;
    U.u[i] = {0.3, -0.1, 0.2};
    U.theta[i] = 1.2;
  }
  const auto out = propagate_fluid(U, 0.0, 0.5, 0.5, grid, FluidParams{});
  CHECK(max_abs_difference(out, U) <= 1e-14);

  CHECK(max_abs_difference(propagate_fluid(U, 0.2, 0.2, 0.5, grid, FluidParams{}), U) == 0.0);
}

TEST_CASE("sod matches the exact riemann solution") {
  CHECK(sod_l1_error(0.05) <= 0.05);
  CHECK(sod_l1_error(0.1) <= 0.05);
}

TEST_CASE("force source accounting") {
  const auto grid = line(40, BoundaryKind::Periodic);
  MomentField U(40);
  for (std::size_t i = 0; i < 40; ++i) {
    U.rho[i] = 1.0;
    U.theta[i] = 1.0;
  }
  FluidParams p;
  p.force = force_field(ForceKind::Confining, grid.space);
  const double dx = grid.space.dx;

  // one step: periodic fluxes telescope, leaving dt sum rho E dx
  const double dt = 0.5 * stable_dt_fluid(U, grid, p);
  const auto one = propagate_fluid(U, 0.0, dt, dt, grid, p);
  double source = 0.0;
  for (std::size_t i = 0; i < 40; ++i) source += dt * U.rho[i] * p.force[i] * dx;
  const auto t0 = conserved_totals(U, dx);
  const auto t1 = conserved_totals(one, dx);
  CHECK(std::abs((t1[1] - t0[1]) - source) <= 1e-14);

  // a single cell: momentum picks up dt rho E exactly when neighbors match
  const auto late = propagate_fluid(U, 0.0, 0.3, 0.01, grid, p);
  const auto t2 = conserved_totals(late, dx);
  CHECK(std::abs(t2[0] - t0[0]) / t0[0] <= 1e-12);
  // the force points toward x = 1 from both sides
  CHECK(late.u[5][0] > 0.0);
  CHECK(late.u[34][0] < 0.0);
}

TEST_CASE("periodic conservation over 1000 steps") {
  const auto grid = line(60, BoundaryKind::Periodic);
  auto U = sod_moments(grid.space);
  const double dt = 0.5 * stable_dt_fluid(U, grid, FluidParams{});
  const auto t0 = conserved_totals(U, grid.space.dx);
  U = propagate_fluid(U, 0.0, 1000 * dt, dt, grid, FluidParams{});
  const auto t1 = conserved_totals(U, grid.space.dx);
  CHECK(std::abs(t1[0] - t0[0]) / t0[0] <= 1e-12);
  CHECK(std::abs(t1[1] - t0[1]) / t0[0] <= 1e-12);
  CHECK(std::abs(t1[2] - t0[2]) / t0[2] <= 1e-12);
}

TEST_CASE("mirror symmetry") {
  const std::size_t n = 30;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> val(0.5, 1.5);
  for (auto bc : {BoundaryKind::Periodic, BoundaryKind::Absorbing}) {
    const auto grid = line(n, bc);
    MomentField U(n), R(n);
    FluidParams p, q;
    p.force.resize(n);
    q.force.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      U.rho[i] = val(rng);
      U.u[i] = {val(rng) - 1.0, val(rng) - 1.0, 0.0};
      U.theta[i] = val(rng);
      p.force[i] = val(rng) - 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = n - 1 - i;
      R.rho[r] = U.rho[i];
      R.u[r] = {-U.u[i][0], U.u[i][1], 0.0};
      R.theta[r] = U.theta[i];
      q.force[r] = -p.force[i];
    }
    const auto A = propagate_fluid(U, 0.0, 0.2, 0.02, grid, p);
    const auto B = propagate_fluid(R, 0.0, 0.2, 0.02, grid, q);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = n - 1 - i;
      CHECK(std::abs(A.rho[i] - B.rho[r]) <= 1e-13);
      CHECK(std::abs(A.u[i][0] + B.u[r][0]) <= 1e-13);
      CHECK(std::abs(A.u[i][1] - B.u[r][1]) <= 1e-13);
      CHECK(std::abs(A.theta[i] - B.theta[r]) <= 1e-13);
    }
  }
}

TEST_CASE("non-physical states raise a blow-up") {
  const auto grid = line(8, BoundaryKind::Periodic);
  MomentField U(8);
  for (std::size_t i = 0; i < 8; ++i) {
    U.rho[i] = 1.0;
    U.theta[i] = 1.0;
  }
  U.rho[3] = std::nan("");
  CHECK_THROWS_AS(propagate_fluid(U, 0.0, 0.1, 0.1, grid, FluidParams{}), Error);
}

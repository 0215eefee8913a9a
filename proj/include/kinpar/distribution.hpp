#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kinpar/grid.hpp"

namespace kinpar {

// Discrete phase-space density f[i][jx][jy][jz], vz fastest. The dimensions
// are tied to the PhaseGrid it was created from.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(const PhaseGrid& grid, double fill = 0.0);

  std::size_t n_x() const { return n_x_; }
  std::size_t n_vx() const { return n_v_[0]; }
  std::size_t n_vy() const { return n_v_[1]; }
  std::size_t n_vz() const { return n_v_[2]; }
  std::size_t cell_size() const { return n_v_[0] * n_v_[1] * n_v_[2]; }

  bool matches(const PhaseGrid& grid) const;

  std::span<double> cell(std::size_t i) {
    return {values_.data() + i * cell_size(), cell_size()};
  }
  std::span<const double> cell(std::size_t i) const {
    return {values_.data() + i * cell_size(), cell_size()};
  }

  double& at(std::size_t i, std::size_t jx, std::size_t jy, std::size_t jz) {
    return values_[index(i, jx, jy, jz)];
  }
  double at(std::size_t i, std::size_t jx, std::size_t jy, std::size_t jz) const {
    return values_[index(i, jx, jy, jz)];
  }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  // Sum of f over phase space weighted by dx * dv^3.
  double total_mass(const PhaseGrid& grid) const;

 private:
  std::size_t index(std::size_t i, std::size_t jx, std::size_t jy, std::size_t jz) const {
    return ((i * n_v_[0] + jx) * n_v_[1] + jy) * n_v_[2] + jz;
  }

  std::size_t n_x_ = 0;
  std::size_t n_v_[3] = {0, 0, 0};
  std::vector<double> values_;
};

}  // namespace kinpar

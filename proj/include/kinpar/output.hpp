#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kinpar/grid.hpp"
#include "kinpar/moments.hpp"
#include "kinpar/parareal.hpp"

namespace kinpar {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

std::string snapshot_filename(std::size_t n);

// One CSV per coarse time, "snap_NNNNN.csv", columns x,rho,ux,uy,uz,theta.
void write_snapshots(std::span<const MomentField> snapshots, const SpatialGrid& grid,
                     const std::filesystem::path& dir);

struct SnapshotFile {
  std::vector<double> x;
  MomentField moments;
};

SnapshotFile read_snapshot(const std::filesystem::path& path);

// "convergence.csv" with columns k,error,seconds.
void write_convergence(std::span<const ConvergenceRecord> records,
                       const std::filesystem::path& dir);

}  // namespace kinpar

#include "kinpar/output.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kinpar/errors.hpp"

namespace kinpar {

namespace fs = std::filesystem;

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec == std::errc()) return std::string(buf.data(), ptr);
  std::snprintf(buf.data(), buf.size(), "%.17g", value);
  return std::string(buf.data());
}

std::string snapshot_filename(std::size_t n) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "snap_%05zu.csv", n);
  return std::string(buf.data());
}

namespace {

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

double parse_field(const std::string& token, const fs::path& path, std::size_t line) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw IoError(path.string(), "malformed number '" + token + "' on line " + std::to_string(line));
  return v;
}

}  // namespace

void write_snapshots(std::span<const MomentField> snapshots, const SpatialGrid& grid,
                     const fs::path& dir) {
  ensure_directory(dir);
  for (std::size_t n = 0; n < snapshots.size(); ++n) {
    const MomentField& U = snapshots[n];
    if (U.size() != grid.n_x) throw ConfigError("snapshot does not match the spatial grid");
    std::string text = "x,rho,ux,uy,uz,theta\n";
    for (std::size_t i = 0; i < U.size(); ++i) {
      text += format_double(grid.centers[i]);
      text += ',';
      text += format_double(U.rho[i]);
      for (double c : U.u[i]) {
        text += ',';
        text += format_double(c);
      }
      text += ',';
      text += format_double(U.theta[i]);
      text += '\n';
    }
    write_file(dir / snapshot_filename(n), text);
  }
}

SnapshotFile read_snapshot(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::string line;
  if (!std::getline(in, line) || line != "x,rho,ux,uy,uz,theta")
    throw IoError(path.string(), "missing or unexpected header");

  SnapshotFile out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, 6> row{};
    std::istringstream fields(line);
    std::string token;
    std::size_t c = 0;
    while (std::getline(fields, token, ',')) {
      if (c >= row.size()) throw IoError(path.string(), "too many columns on line " + std::to_string(line_no));
      row[c++] = parse_field(token, path, line_no);
    }
    if (c != row.size()) throw IoError(path.string(), "too few columns on line " + std::to_string(line_no));
    out.x.push_back(row[0]);
    out.moments.rho.push_back(row[1]);
    out.moments.u.push_back({row[2], row[3], row[4]});
    out.moments.theta.push_back(row[5]);
  }
  return out;
}

void write_convergence(std::span<const ConvergenceRecord> records, const fs::path& dir) {
  if (records.empty()) throw ConfigError("no convergence records to write");
  ensure_directory(dir);
  std::string text = "k,error,seconds\n";
  for (const auto& r : records) {
    text += std::to_string(r.k);
    text += ',';
    text += format_double(r.error);
    text += ',';
    text += format_double(r.seconds);
    text += '\n';
  }
  write_file(dir / "convergence.csv", text);
}

}  // namespace kinpar

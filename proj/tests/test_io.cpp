#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kinpar/comparison.hpp"
#include "kinpar/config.hpp"
#include "kinpar/errors.hpp"
#include "kinpar/fluid.hpp"
#include "kinpar/output.hpp"

using namespace kinpar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("kinpar_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

void check_parse_error(const std::string& text, const std::string& key, std::size_t line) {
  try {
    (void)parse_config(text);
    FAIL("expected a parse error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.key() == key);
    CHECK(e.line() == line);
  }
}

}  // namespace

TEST_CASE("preset config") {
  const auto c = parse_config("preset=sod\n");
  CHECK(c.epsilon == 1e-2);
  CHECK(c.n_g == 200);
  CHECK(c.n_f == 800);
  CHECK(c.k_max == 80);
  CHECK(c.tol == 1e-8);
  CHECK(c.n_x == 200);
  CHECK(c.initial == CaseName::Sod);

  const auto o = parse_config("# desk run\npreset=sod\nn_x=50   # fewer cells\n\n");
  CHECK(o.n_x == 50);
  CHECK(o.n_g == 200);

  const auto b = parse_config("preset=beams\nn_vy=8\nn_vz=8\nworkers=4\nschedule=static\nalgorithm=basic");
  CHECK(b.n_v == std::array<std::size_t, 3>{256, 8, 8});
  CHECK(b.workers == 4);
  CHECK(b.schedule == Schedule::Static);
  CHECK_FALSE(b.use_frozen_prefix);
  CHECK(b.force == ForceKind::Confining);
}

TEST_CASE("explicit config") {
  const auto c = parse_config(
      "initial=blast\nx_min=0\nx_max=2\nn_x=40\nv_max=8\nn_v=12\nbc=periodic\nepsilon=0.1\n"
      "t_final=0.2\nn_g=10\nn_f=40\ntau_model=density\ntau=2\nmode=fluid\noutput_dir=res\n");
  CHECK(c.initial == CaseName::Blast);
  CHECK(c.n_v == std::array<std::size_t, 3>{12, 12, 12});
  CHECK(c.boundary == BoundaryKind::Periodic);
  CHECK(c.tau_model == TauModel::Density);
  CHECK(c.tau_scale == 2.0);
  CHECK(c.mode == RunMode::Fluid);
  CHECK(c.output_dir == "res");
  const auto p = make_problem(c);
  CHECK(p.kinetic.tau(0.5, 1.0) == 1.0);
}

TEST_CASE("config errors name the key and line") {
  check_parse_error("n_g=0", "n_g", 1);
  check_parse_error("preset=sod\nfoo=1", "foo", 2);
  check_parse_error("preset=sod\nn_x=ten", "n_x", 2);
  check_parse_error("preset=sod\nepsilon=-1", "epsilon", 2);
  check_parse_error("preset=sod\nepsilon=nan", "epsilon", 2);
  check_parse_error("preset=sod\nn_x=4\nn_x=5", "n_x", 3);
  check_parse_error("preset=sod\nbc=", "bc", 2);
  check_parse_error("preset=sod\nbc=mirror", "bc", 2);
  check_parse_error("preset=sod\ncfl_fluid=1.5", "cfl_fluid", 2);
  check_parse_error("preset=sod\n\nn_f=10", "n_f", 3);
  check_parse_error("preset=vortex", "preset", 1);
  CHECK_THROWS_AS(load_config("/nonexistent/kinpar.cfg"), IoError);
}

TEST_CASE("float formatting round trips") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> val(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double x = val(rng) * std::pow(10.0, k % 40 - 20);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.125) == "0.125");
  CHECK(snapshot_filename(7) == "snap_00007.csv");
}

TEST_CASE("snapshot files") {
  TempDir tmp;
  const auto grid = build_spatial_grid(0.0, 2.0, 3);
  std::vector<MomentField> snaps;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> val(0.1, 2.0);
  for (int n = 0; n < 3; ++n) {
    MomentField U(3);
    for (std::size_t i = 0; i < 3; ++i) {
      U.rho[i] = val(rng);
      U.u[i] = {val(rng) - 1.0, 1.0 / 3.0, -val(rng)};
      U.theta[i] = val(rng);
    }
    snaps.push_back(U);
  }
  write_snapshots(snaps, grid, tmp.path);
  for (std::size_t n = 0; n < 3; ++n) {
    const auto file = tmp.path / snapshot_filename(n);
    const auto lines = lines_of(file);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "x,rho,ux,uy,uz,theta");
    const auto back = read_snapshot(file);
    CHECK(back.x == grid.centers);
    CHECK(back.moments.rho == snaps[n].rho);
    CHECK(back.moments.u == snaps[n].u);
    CHECK(back.moments.theta == snaps[n].theta);
  }
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(tmp.path)) count += entry.is_regular_file();
  CHECK(count == 3);
}

TEST_CASE("sod snapshot rows") {
  TempDir tmp;
  const auto grid = build_spatial_grid(0.0, 2.0, 8);
  const std::vector<MomentField> snaps{sod_moments(grid)};
  write_snapshots(snaps, grid, tmp.path);
  const auto lines = lines_of(tmp.path / snapshot_filename(0));
  REQUIRE(lines.size() == 9);
  CHECK(lines[1] == "0.125,1,0,0,0,1");
  CHECK(lines[4] == "0.875,1,0,0,0,1");
  CHECK(lines[5] == "1.125,0.125,0,0,0,0.8");
}

TEST_CASE("convergence file") {
  TempDir tmp;
  std::vector<ConvergenceRecord> records{{1, 0.5, 0.01, {}}, {2, 0.01, 0.02, {}}, {3, 1e-9, 0.03, {}}};
  write_convergence(records, tmp.path);
  const auto lines = lines_of(tmp.path / "convergence.csv");
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "k,error,seconds");
  CHECK(lines[1] == "1,0.5,0.01");
  CHECK(lines[3] == "3,1e-09,0.03");
  CHECK_THROWS_AS(write_convergence({}, tmp.path), Error);
}

TEST_CASE("unwritable output surfaces the path") {
  TempDir tmp;
  const auto blocker = tmp.path / "file";
  std::ofstream(blocker) << "x";
  const auto grid = build_spatial_grid(0.0, 1.0, 2);
  const std::vector<MomentField> snaps{MomentField(2)};
  try {
    write_snapshots(snaps, grid, blocker / "sub");
    FAIL("expected an I/O error");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("file") != std::string::npos);
  }
}

TEST_CASE("fluid-only comparison run") {
  TempDir tmp;
  auto c = parse_config("preset=sod\nn_x=40\nn_v=8\nn_g=10\nn_f=20\nt_final=0.1");
  c.output_dir = tmp.path.string();
  const RunMode modes[] = {RunMode::Fluid};
  const auto res = run_comparison(c, modes);
  REQUIRE(res.fluid.has_value());
  CHECK_FALSE(res.parareal.has_value());

  const auto p = make_problem(c);
  MomentField U = initial_moments(c, p.grid);
  for (std::size_t n = 1; n <= c.n_g; ++n)
    U = propagate_fluid(U, p.times.coarse_time(n - 1), p.times.coarse_time(n), p.times.dt_g,
                        p.grid, p.fluid);
  CHECK(max_abs_difference(U, res.fluid->back()) == 0.0);

  CHECK(fs::exists(tmp.path / "fluid" / snapshot_filename(10)));
  CHECK(fs::exists(tmp.path / "timing.json"));
  std::ifstream in(tmp.path / "timing.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j["fluid_seconds"].get<double>() >= 0.0);
  CHECK(j["parareal_seconds"].is_null());
}

TEST_CASE("parareal comparison writes the convergence log") {
  TempDir tmp;
  auto c = parse_config("preset=sod\nn_x=20\nn_v=8\nn_g=4\nn_f=16\nt_final=0.1\nk_max=4\ntol=1e-12");
  c.output_dir = tmp.path.string();
  const RunMode modes[] = {RunMode::Parareal, RunMode::Fine};
  const auto res = run_comparison(c, modes);
  REQUIRE(res.parareal.has_value());
  REQUIRE(res.fine.has_value());
  const auto lines = lines_of(tmp.path / "parareal" / "convergence.csv");
  CHECK(lines.size() == res.records.size() + 1);
  CHECK(res.report.speedup.has_value());
  CHECK(res.report.estimate.has_value());
  for (std::size_t n = 0; n <= c.n_g; ++n)
    CHECK(max_abs_difference((*res.parareal)[n], (*res.fine)[n]) <= 1e-10);
}

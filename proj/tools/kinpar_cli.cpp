#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kinpar/comparison.hpp"
#include "kinpar/config.hpp"
#include "kinpar/errors.hpp"

namespace {

void print_report(const kinpar::ComparisonResult& r) {
  const auto& rep = r.report;
  if (!r.records.empty()) {
    std::cout << "parareal: " << rep.iterations << " iteration(s), final error "
              << r.records.back().error << (rep.converged ? " (converged)" : "") << '\n';
  }
  if (rep.parareal_seconds) std::cout << "parareal wall time: " << *rep.parareal_seconds << " s\n";
  if (rep.fine_seconds) std::cout << "serial fine wall time: " << *rep.fine_seconds << " s\n";
  if (rep.fluid_seconds) std::cout << "serial fluid wall time: " << *rep.fluid_seconds << " s\n";
  if (rep.speedup) std::cout << "measured speedup: " << *rep.speedup << '\n';
  if (rep.estimate) std::cout << "k_opt estimate: " << rep.estimate->k_opt << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiscale parareal solver for the Vlasov-BGK equation"};
  app.require_subcommand(1);

  std::string config_path;
  std::string mode_name;
  unsigned workers = 0;
  std::string out_dir;

  auto* run = app.add_subcommand("run", "Run one mode (parareal, fine or fluid)");
  run->add_option("--config", config_path, "Configuration file (key=value)")->required();
  run->add_option("--mode", mode_name, "parareal | fine | fluid")
      ->check(CLI::IsMember({"parareal", "fine", "fluid"}));
  run->add_option("--workers", workers, "Worker threads for the fine propagations")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", out_dir, "Output directory");

  auto* compare = app.add_subcommand("compare", "Run parareal, serial fine and serial fluid");
  compare->add_option("--config", config_path, "Configuration file (key=value)")->required();
  compare->add_option("--workers", workers, "Worker threads for the fine propagations")
      ->check(CLI::PositiveNumber);
  compare->add_option("--out", out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    kinpar::RunConfig config = kinpar::load_config(config_path);
    if (!mode_name.empty()) config.mode = kinpar::parse_run_mode(mode_name);
    if (workers > 0) config.workers = workers;
    if (!out_dir.empty()) config.output_dir = out_dir;

    std::vector<kinpar::RunMode> modes;
    if (*compare)
      modes = {kinpar::RunMode::Fluid, kinpar::RunMode::Fine, kinpar::RunMode::Parareal};
    else
      modes = {config.mode};

    const auto result = kinpar::run_comparison(config, modes);
    print_report(result);
    std::cout << "artifacts written to " << config.output_dir << '\n';
    return 0;
  } catch (const kinpar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 3;
  }
}

#include "kinpar/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kinpar/errors.hpp"
#include "kinpar/lifting.hpp"

namespace kinpar {

std::string_view to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Parareal:
      return "parareal";
    case RunMode::Fine:
      return "fine";
    case RunMode::Fluid:
      return "fluid";
  }
  return "unknown";
}

RunMode parse_run_mode(std::string_view name) {
  if (name == "parareal") return RunMode::Parareal;
  if (name == "fine") return RunMode::Fine;
  if (name == "fluid") return RunMode::Fluid;
  throw ConfigError("unknown run mode '" + std::string(name) + "'");
}

RunConfig RunConfig::from_preset(CaseName name) {
  const CasePreset p = kinpar::preset(name);
  RunConfig c;
  c.preset = name;
  c.initial = name;
  c.x_min = p.x_min;
  c.x_max = p.x_max;
  c.n_x = p.n_x;
  c.v_max = p.v_max;
  c.n_v = p.n_v;
  c.boundary = p.boundary;
  c.force = p.force;
  c.epsilon = p.epsilon;
  c.t_final = p.t_final;
  c.n_g = p.n_g;
  c.n_f = p.n_f;
  c.k_max = p.k_max;
  c.tol = p.tol;
  return c;
}

void RunConfig::validate() const {
  if (!(x_max > x_min)) throw ConfigError("x_max must exceed x_min");
  if (n_x < 2) throw ConfigError("n_x must be at least 2");
  if (!(v_max > 0.0)) throw ConfigError("v_max must be positive");
  for (std::size_t n : n_v)
    if (n < 2) throw ConfigError("velocity counts must be at least 2");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(tau_scale > 0.0)) throw ConfigError("tau must be positive");
  if (!(cfl_kinetic > 0.0 && cfl_kinetic <= 1.0)) throw ConfigError("cfl_kinetic must lie in (0, 1]");
  if (!(cfl_fluid > 0.0 && cfl_fluid <= 1.0)) throw ConfigError("cfl_fluid must lie in (0, 1]");
  if (!(t_final > 0.0)) throw ConfigError("t_final must be positive");
  if (n_g < 1) throw ConfigError("n_g must be at least 1");
  if (n_f < n_g) throw ConfigError("n_f must be at least n_g");
  if (k_max < 1) throw ConfigError("k_max must be at least 1");
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

namespace {

struct Entry {
  std::string value;
  std::size_t line;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(const std::string& key, const Entry& e) {
  double v = 0.0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ParseError(key, e.line, "expected a finite number, got '" + e.value + "'");
  return v;
}

double parse_positive(const std::string& key, const Entry& e) {
  const double v = parse_real(key, e);
  if (!(v > 0.0)) throw ParseError(key, e.line, "must be positive");
  return v;
}

std::size_t parse_count(const std::string& key, const Entry& e, std::size_t minimum) {
  std::size_t v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(key, e.line, "expected a non-negative integer, got '" + e.value + "'");
  if (v < minimum)
    throw ParseError(key, e.line, "must be at least " + std::to_string(minimum));
  return v;
}

double parse_cfl(const std::string& key, const Entry& e) {
  const double v = parse_real(key, e);
  if (!(v > 0.0 && v <= 1.0)) throw ParseError(key, e.line, "must lie in (0, 1]");
  return v;
}

template <class F>
auto parse_enum(const std::string& key, const Entry& e, F parse) {
  try {
    return parse(e.value);
  } catch (const ConfigError& err) {
    throw ParseError(key, e.line, err.what());
  }
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "preset",  "initial",     "x_min",     "x_max",     "n_x",     "v_max",   "n_v",
      "n_vx",    "n_vy",        "n_vz",      "bc",        "force",   "epsilon", "tau_model",
      "tau",     "cfl_kinetic", "cfl_fluid", "t_final",   "n_g",     "n_f",     "k_max",
      "tol",     "algorithm",   "schedule",  "workers",   "output_dir", "mode"};
  return keys;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos)
      throw ParseError(content, line_no, "expected key=value");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    if (!known_keys().contains(key)) throw ParseError(key, line_no, "unknown key");
    if (value.empty()) throw ParseError(key, line_no, "missing value");
    if (entries.contains(key)) throw ParseError(key, line_no, "duplicate key");
    entries.emplace(key, Entry{value, line_no});
  }

  RunConfig c;
  const bool has_preset = entries.contains("preset");
  if (has_preset) c = RunConfig::from_preset(parse_enum("preset", entries.at("preset"), parse_case_name));

  auto get = [&](const char* key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  if (auto e = get("initial")) c.initial = parse_enum("initial", *e, parse_case_name);
  if (auto e = get("x_min")) c.x_min = parse_real("x_min", *e);
  if (auto e = get("x_max")) c.x_max = parse_real("x_max", *e);
  if (auto e = get("n_x")) c.n_x = parse_count("n_x", *e, 2);
  if (auto e = get("v_max")) c.v_max = parse_positive("v_max", *e);
  if (auto e = get("n_v")) {
    const std::size_t n = parse_count("n_v", *e, 2);
    c.n_v = {n, n, n};
  }
  if (auto e = get("n_vx")) c.n_v[0] = parse_count("n_vx", *e, 2);
  if (auto e = get("n_vy")) c.n_v[1] = parse_count("n_vy", *e, 2);
  if (auto e = get("n_vz")) c.n_v[2] = parse_count("n_vz", *e, 2);
  if (auto e = get("bc")) c.boundary = parse_enum("bc", *e, parse_boundary_kind);
  if (auto e = get("force")) {
    if (e->value == "none")
      c.force = ForceKind::None;
    else if (e->value == "confining")
      c.force = ForceKind::Confining;
    else
      throw ParseError("force", e->line, "expected none or confining");
  }
  if (auto e = get("epsilon")) c.epsilon = parse_positive("epsilon", *e);
  if (auto e = get("tau_model")) {
    if (e->value == "constant")
      c.tau_model = TauModel::Constant;
    else if (e->value == "density")
      c.tau_model = TauModel::Density;
    else
      throw ParseError("tau_model", e->line, "expected constant or density");
  }
  if (auto e = get("tau")) c.tau_scale = parse_positive("tau", *e);
  if (auto e = get("cfl_kinetic")) c.cfl_kinetic = parse_cfl("cfl_kinetic", *e);
  if (auto e = get("cfl_fluid")) c.cfl_fluid = parse_cfl("cfl_fluid", *e);
  if (auto e = get("t_final")) c.t_final = parse_positive("t_final", *e);
  if (auto e = get("n_g")) c.n_g = parse_count("n_g", *e, 1);
  if (auto e = get("n_f")) c.n_f = parse_count("n_f", *e, 1);
  if (auto e = get("k_max")) c.k_max = parse_count("k_max", *e, 1);
  if (auto e = get("tol")) c.tol = parse_positive("tol", *e);
  if (auto e = get("algorithm")) {
    if (e->value == "optimized")
      c.use_frozen_prefix = true;
    else if (e->value == "basic")
      c.use_frozen_prefix = false;
    else
      throw ParseError("algorithm", e->line, "expected optimized or basic");
  }
  if (auto e = get("schedule")) {
    if (e->value == "dynamic")
      c.schedule = Schedule::Dynamic;
    else if (e->value == "static")
      c.schedule = Schedule::Static;
    else
      throw ParseError("schedule", e->line, "expected dynamic or static");
  }
  if (auto e = get("workers")) c.workers = static_cast<unsigned>(parse_count("workers", *e, 1));
  if (auto e = get("output_dir")) c.output_dir = e->value;
  if (auto e = get("mode")) c.mode = parse_enum("mode", *e, parse_run_mode);

  if (!has_preset) {
    for (const char* required : {"initial", "x_min", "x_max", "n_x", "v_max", "bc", "epsilon",
                                 "t_final", "n_g", "n_f"})
      if (!entries.contains(required))
        throw ParseError(required, 0, "required when no preset is given");
    const bool all_axes =
        entries.contains("n_vx") && entries.contains("n_vy") && entries.contains("n_vz");
    if (!entries.contains("n_v") && !all_axes)
      throw ParseError("n_v", 0, "required (or n_vx, n_vy, n_vz) when no preset is given");
  }

  // Cross-field constraints are reported against the later-listed key.
  if (!(c.x_max > c.x_min)) {
    const Entry* e = get("x_max") ? get("x_max") : get("x_min");
    throw ParseError("x_max", e ? e->line : 0, "must exceed x_min");
  }
  if (c.n_f < c.n_g) {
    const Entry* e = get("n_f") ? get("n_f") : get("n_g");
    throw ParseError("n_f", e ? e->line : 0, "must be at least n_g");
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open configuration file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

PhaseGrid make_phase_grid(const RunConfig& config) {
  PhaseGrid grid;
  grid.space = build_spatial_grid(config.x_min, config.x_max, config.n_x);
  grid.velocity = build_velocity_grid(config.v_max, config.n_v);
  grid.boundary = config.boundary;
  return grid;
}

MultiscaleProblem make_problem(const RunConfig& config) {
  config.validate();
  MultiscaleProblem p;
  p.grid = make_phase_grid(config);
  p.times = build_time_grids(config.t_final, config.n_g, config.n_f);
  const std::vector<double> force = force_field(config.force, p.grid.space);

  p.kinetic.epsilon = config.epsilon;
  p.kinetic.cfl = config.cfl_kinetic;
  p.kinetic.force = force;
  const double scale = config.tau_scale;
  if (config.tau_model == TauModel::Density)
    p.kinetic.tau = [scale](double rho, double) { return scale * rho; };
  else
    p.kinetic.tau = constant_rate(scale);

  p.fluid.force = force;
  p.fluid.cfl = config.cfl_fluid;
  p.validate();
  return p;
}

PararealConfig make_parareal_config(const RunConfig& config) {
  PararealConfig pc;
  pc.k_max = config.k_max;
  pc.tol = config.tol;
  pc.use_frozen_prefix = config.use_frozen_prefix;
  pc.workers = config.workers;
  pc.schedule = config.schedule;
  return pc;
}

MomentField initial_moments(const RunConfig& config, const PhaseGrid& grid) {
  return project(initial_distribution(config.initial, grid), grid);
}

}  // namespace kinpar

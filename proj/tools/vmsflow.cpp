#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "vms/app/runner.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilized finite-element solver for coupled flow and transport"};
  app.require_subcommand(1);

  std::string preset_name, ndiv_list, out_dir;
  auto* conv = app.add_subcommand("convergence", "Run a manufactured-solution refinement sweep");
  conv->add_option("--preset", preset_name, "Named preset")->required();
  conv->add_option("--ndiv", ndiv_list, "Comma-separated refinement list, e.g. 10,20,40,80");
  conv->add_option("--out", out_dir, "Output directory (VMSFLOW_OUT_DIR overrides)");

  std::string re_list = "100,400,1000";
  int grid = 64;
  auto* cav = app.add_subcommand("cavity", "Run lid-driven cavity steady states");
  cav->add_option("--re", re_list, "Comma-separated Reynolds numbers");
  cav->add_option("--grid", grid, "Structured grid subdivisions per side");
  cav->add_option("--out", out_dir, "Output directory (VMSFLOW_OUT_DIR overrides)");

  std::string config_path;
  auto* solve = app.add_subcommand("solve", "Run from a config file");
  solve->add_option("--config", config_path, "Config file path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    vms::app::RunConfig cfg;
    if (conv->parsed()) {
      cfg = vms::app::preset(preset_name);
      if (cfg.command != "convergence") {
        throw std::invalid_argument("preset '" + preset_name + "' is not a convergence preset");
      }
      if (!ndiv_list.empty()) cfg.ndiv = parse_int_list(ndiv_list);
    } else if (cav->parsed()) {
      cfg = vms::app::preset("cavity");
      cfg.cavity_re = parse_double_list(re_list);
      cfg.cavity_grid = grid;
    } else {
      cfg = vms::app::load_config_file(config_path);
    }
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    return vms::app::run_config(cfg);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "run failed: %s\n", e.what());
    return kExitNumericalFailure;
  }
}

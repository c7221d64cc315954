#pragma once

#include <string>
#include <vector>

#include "vms/manufactured.hpp"
#include "vms/solver.hpp"

namespace vms::app {

// One run description, read from a flat key-value file with [sections] or
// from a built-in preset. Every key is validated; unknown keys are rejected.
struct RunConfig {
  // [run]
  std::string command = "convergence";  // convergence | cavity | solve
  std::string scenario = "weak_const";
  double re = 100.0;
  std::vector<int> ndiv = {10, 20, 40, 80};
  double dt = 0.0;  // 0 means coupled: dt = 1/n_div
  double T = 1.0;
  std::string out_dir = "out";

  // [physics]
  double rho = 1.0;
  double alpha = 0.01;
  double tau_y = 0.0;
  std::string viscosity = "constant";  // constant | casson_k | linear_c | exp_c
  double eta_bar = 0.01;
  double k0 = 0.1937;
  double k1 = 0.055;
  double eta0_p = 0.16;
  double K = 0.25;
  double A = 0.129;
  double B = 0.101;
  std::string diffusion = "constant";  // constant | variable
  double d_const = 0.01;

  // [stabilization]
  StabConstants stab;
  double eps_j2 = 1e-10;

  // [solver]
  std::string method = "auto";  // auto | direct | gmres
  double tol = 1e-9;
  int max_iter = 500;
  int n_picard = 1;

  // [cavity]
  std::vector<double> cavity_re = {100.0, 400.0, 1000.0};
  int cavity_grid = 64;
  double pseudo_dt = 0.2;
  double tol_steady = 1e-5;
  int max_steps = 3000;

  std::string to_text() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Built-in presets: weak_const_re{100,500,5000,10000,50000}, weak_casson_k,
// strong_linear_c, strong_exp_c, cavity, smoke.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Build the physical coefficient set (with manufactured forcing for the
// convergence scenarios) described by the config.
ManufacturedCase case_from_config(const RunConfig& cfg);

LinearOptions linear_options_for(const RunConfig& cfg, int n_div);

}  // namespace vms::app

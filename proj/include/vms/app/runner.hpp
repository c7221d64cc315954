#pragma once

#include <string>
#include <vector>

#include "vms/app/config.hpp"
#include "vms/cavity_post.hpp"
#include "vms/verification.hpp"

namespace vms::app {

struct ConvergenceResult {
  std::string label;
  std::vector<RocRow> rows;
  std::vector<std::string> failures;  // one message per refinement that failed
  std::string csv_path;
};

// Run the configured refinement sweep, write the CSV table, print the console
// table. Failed refinements are annotated and skipped; everything failing is a
// numerical error.
ConvergenceResult run_convergence(const RunConfig& cfg);

struct CavityCaseResult {
  double re = 0.0;
  bool converged = false;
  int steps = 0;
  double extremum_value = 0.0;
  std::array<double, 2> extremum_xy = {0.0, 0.0};
  double extremum_distance = 0.0;  // to the geometric center (0.5, 0.5)
  std::string vtk_path, psi_csv_path, centerline_csv_path;
};

std::vector<CavityCaseResult> run_cavity(const RunConfig& cfg);

// Dispatch on cfg.command; returns the process exit code
// (0 success, 3 numerical failure). Config errors throw std::invalid_argument.
int run_config(const RunConfig& cfg);

}  // namespace vms::app

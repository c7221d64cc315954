#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vms/manufactured.hpp"
#include "vms/solver.hpp"

namespace vms {

// max-in-time L2 plus time-accumulated full H1, squared pieces
struct PbarAccumulator {
  double max_l2_sq = 0.0;
  double accum_h1_sq = 0.0;

  void add_level(double l2_sq, double gx_sq, double gy_sq, double dt);
  double norm_sq() const { return max_l2_sq + accum_h1_sq; }
};

// time-accumulated L2 (single dt factor)
struct QbarAccumulator {
  double accum_sq = 0.0;

  void add_level(double l2_sq, double dt) { accum_sq += dt * l2_sq; }
  double norm_sq() const { return accum_sq; }
};

struct ErrorReport {
  double e_u = 0.0;
  double e_p = 0.0;
  double e_c = 0.0;
  double total = 0.0;      // sqrt(e_u^2 + e_p^2 + e_c^2)
  double total_sum = 0.0;  // e_u + e_p + e_c, emitted alongside
};

// Trajectory errors against the exact solution: e_u and e_c in the P-bar
// norm, e_p as the time-accumulated full-H1 density of the mean-matched
// pressure difference (this reproduces the reference table magnitudes; the
// plain L2 density superconverges on these structured meshes).
// Requires all time levels n = 0..N.
ErrorReport trajectory_error_norms(const Mesh& mesh, const TransientRun& run,
                                   const ManufacturedSolution& exact, double dt);

struct RocRow {
  std::string label;
  double dt = 0.0;
  int inv_h = 0;
  ErrorReport err;
  std::optional<double> roc_u, roc_c, roc_p, roc_total;
};

// Rates of convergence under simultaneous 2x refinement of h and dt:
// RoC = log2(e_coarse / e_fine); the first row has no RoC.
std::vector<RocRow> roc_table(const std::vector<std::pair<int, ErrorReport>>& reports,
                              const std::string& label);

// Residual-based element indicator eta_k = h_k * ||(R1, R2, R3)||_{L2(K)}.
std::vector<double> error_indicator(const Mesh& mesh, const FieldState& state_prev,
                                    const FieldState& state_new, const CoefficientSet& coeffs,
                                    double dt);

}  // namespace vms

#pragma once

#include "vms/fe_core.hpp"
#include "vms/solver.hpp"

namespace vms {

struct StreamFunctionField {
  Eigen::VectorXd psi;
  int extremum_node = -1;  // node with the largest |psi|
  double extremum_value = 0.0;
  std::array<double, 2> extremum_xy = {0.0, 0.0};
};

// Solve -Laplace(psi) = du2/dx - du1/dy weakly with psi = 0 on the boundary.
// The vorticity right-hand side is built from elementwise-constant gradients
// lumped to nodes by area weighting.
StreamFunctionField compute_streamfunction(const Mesh& mesh, const FieldState& state,
                                           const LinearOptions& linear = {});

struct CenterlineProfiles {
  std::vector<double> y, u1_mid;  // u1 along x = 0.5
  std::vector<double> x, u2_mid;  // u2 along y = 0.5
};

CenterlineProfiles centerline_profiles(const Mesh& mesh, const FieldState& state);

}  // namespace vms

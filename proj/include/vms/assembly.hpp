#pragma once

#include <Eigen/Sparse>

#include "vms/coefficients.hpp"
#include "vms/fe_core.hpp"
#include "vms/mesh.hpp"
#include "vms/stabilization.hpp"

namespace vms {

// Global unknown layout: [u1; u2; p; c], one block per variable.
struct DofMap {
  int n_nodes = 0;
  int u1(int node) const { return node; }
  int u2(int node) const { return n_nodes + node; }
  int p(int node) const { return 2 * n_nodes + node; }
  int c(int node) const { return 3 * n_nodes + node; }
  int size() const { return 4 * n_nodes; }
};

struct AssembledSystem {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
  DofMap dofs;
  std::vector<std::pair<int, double>> constrained_rows;  // dof, value
};

struct AssemblyOptions {
  bool include_stabilization = true;
  double stab_scale = 1.0;  // 0 recovers the plain Galerkin system
  // Optional Picard state supplying the frozen convection velocity and
  // viscosity fields; the time-derivative history always comes from
  // state_prev. Defaults to state_prev itself (semi-implicit scheme).
  const FieldState* linearization = nullptr;
};

// One semi-implicit time step of the stabilized formulation: Galerkin terms
// with convection and viscosity frozen at t^n, plus the subscale coupling
// terms with the dynamic subscale history. Dirichlet rows are not yet
// constrained; call apply_dirichlet on the result.
AssembledSystem assemble_step(const Mesh& mesh, const FieldState& state_prev,
                              const SubscaleField& subs_prev, const CoefficientSet& coeffs,
                              const std::vector<ElemStab>& stab, double dt, double t_new,
                              const AssemblyOptions& options = {});

// Constrain u1, u2, c on every boundary node to the coefficient-set boundary
// data at t_new, and pin one pressure dof to zero. Rows and columns are
// eliminated symmetrically.
void apply_dirichlet(AssembledSystem& sys, const Mesh& mesh, const CoefficientSet& coeffs,
                     double t_new, int pinned_pressure_node = 0);

// Skew-symmetrized convection block over the velocity dofs [u1; u2] only,
// used by the discrete skew-symmetry checks.
Eigen::SparseMatrix<double> assemble_convection_block(const Mesh& mesh, const FieldState& state_n,
                                                      double rho);

}  // namespace vms

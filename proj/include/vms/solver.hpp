#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vms/assembly.hpp"

namespace vms {

enum class LinearMethod { direct_lu, gmres_ilu };

struct LinearOptions {
  LinearMethod method = LinearMethod::direct_lu;
  double tol = 1e-9;
  int max_iter = 500;
};

Eigen::VectorXd solve_linear(const Eigen::SparseMatrix<double>& matrix, const Eigen::VectorXd& rhs,
                             const LinearOptions& options = {});

struct InitialCondition {
  ScalarField u1 = zero_field();
  ScalarField u2 = zero_field();
  ScalarField p = zero_field();
  ScalarField c = zero_field();
};

struct StepInfo {
  int step = 0;  // 1-based, state is at t = step*dt
  const FieldState* state = nullptr;
  const SubscaleField* subscales = nullptr;
  double residual_l2 = 0.0;  // quadrature L2 norm of the full strong residual
  const FieldState* state_prev = nullptr;
};

using StepObserver = std::function<void(const StepInfo&)>;

struct TransientOptions {
  double dt = 0.1;
  double T = 1.0;
  StabConstants stab;
  LinearOptions linear;
  int n_picard = 1;  // repeated assembly with updated frozen fields per step
  bool retain_trajectory = false;
};

struct TransientRun {
  std::vector<FieldState> states;  // retained trajectory incl. t=0 when requested
  FieldState final_state;
  SubscaleField subscales;
  int n_steps = 0;
};

// Backward Euler loop: assemble with (state^n, subscales^n), solve, shift the
// pressure to zero mean, evaluate the strong residual with the new state, and
// advance the subscales.
TransientRun run_transient(const Mesh& mesh, const CoefficientSet& coeffs,
                           const std::optional<InitialCondition>& initial,
                           const TransientOptions& options,
                           const std::vector<StepObserver>& observers = {});

struct SteadyOptions {
  double pseudo_dt = 0.2;
  double tol_steady = 1e-6;  // converged when ||du||_inf < tol_steady * dt
  int max_steps = 2000;
  StabConstants stab;
  LinearOptions linear;
};

struct SteadyResult {
  FieldState state;
  bool converged = false;
  int steps = 0;
  std::vector<double> update_history;  // ||du||_inf per step
};

// Pseudo-transient continuation to a steady state with lid boundary data
// taken from coeffs.bc_u1/bc_u2.
SteadyResult run_steady_cavity(const Mesh& mesh, const CoefficientSet& coeffs,
                               const SteadyOptions& options);

// Picks direct LU up to n_div = 128 and GMRES+ILU beyond.
LinearMethod default_method_for(int n_div);

}  // namespace vms

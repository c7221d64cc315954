#include "vms/solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

namespace vms {

Eigen::VectorXd solve_linear(const Eigen::SparseMatrix<double>& matrix, const Eigen::VectorXd& rhs,
                             const LinearOptions& options) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != rhs.size()) {
    throw std::invalid_argument("solve_linear: dimension mismatch");
  }
  if (options.method == LinearMethod::direct_lu) {
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(matrix);
    if (lu.info() != Eigen::Success) {
      throw std::runtime_error("solve_linear: sparse LU factorization failed (singular matrix?)");
    }
    Eigen::VectorXd x = lu.solve(rhs);
    const double res = (matrix * x - rhs).norm();
    const double ref = std::max(rhs.norm(), 1.0);
    if (!(res <= 1e-10 * ref)) {
      std::ostringstream os;
      os << "solve_linear: direct residual " << res << " exceeds 1e-10*||b|| (" << 1e-10 * ref
         << ")";
      throw std::runtime_error(os.str());
    }
    return x;
  }

  Eigen::GMRES<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> gmres;
  gmres.setTolerance(options.tol);
  gmres.setMaxIterations(options.max_iter);
  gmres.set_restart(50);
  gmres.compute(matrix);
  if (gmres.info() != Eigen::Success) {
    throw std::runtime_error("solve_linear: ILU setup failed");
  }
  Eigen::VectorXd x = gmres.solve(rhs);
  if (gmres.info() != Eigen::Success) {
    std::ostringstream os;
    os << "solve_linear: GMRES stagnated after " << gmres.iterations()
       << " iterations, relative residual " << gmres.error();
    throw std::runtime_error(os.str());
  }
  return x;
}

LinearMethod default_method_for(int n_div) {
  return n_div <= 128 ? LinearMethod::direct_lu : LinearMethod::gmres_ilu;
}

namespace {

void shift_pressure_to_zero_mean(const Mesh& mesh, FieldState& state) {
  // discrete mean of a P1 field over the unit square
  double mean = 0.0;
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    const auto& tri = mesh.triangles[k];
    mean += g.area / 3.0 * (state.p[tri[0]] + state.p[tri[1]] + state.p[tri[2]]);
  }
  state.p.array() -= mean;
}

FieldState interpolate_initial(const Mesh& mesh, const InitialCondition& ic) {
  FieldState s = FieldState::zeros(mesh.n_nodes(), 0.0);
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    const double x = mesh.nodes[i][0];
    const double y = mesh.nodes[i][1];
    s.u1[i] = ic.u1(x, y, 0.0);
    s.u2[i] = ic.u2(x, y, 0.0);
    s.p[i] = ic.p(x, y, 0.0);
    s.c[i] = ic.c(x, y, 0.0);
  }
  return s;
}

void apply_boundary_values(const Mesh& mesh, const CoefficientSet& coeffs, double t,
                           FieldState& s) {
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    if (!mesh.is_boundary(i)) continue;
    const double x = mesh.nodes[i][0];
    const double y = mesh.nodes[i][1];
    s.u1[i] = coeffs.bc_u1(x, y, t);
    s.u2[i] = coeffs.bc_u2(x, y, t);
    s.c[i] = coeffs.bc_c(x, y, t);
  }
}

double residual_l2_norm(const Mesh& mesh, const FieldState& prev, const FieldState& next,
                        const CoefficientSet& coeffs, double dt) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  double acc = 0.0;
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    for (int q = 0; q < rule.n(); ++q) {
      const ResidualSample r = strong_residual(mesh, prev, next, coeffs, dt, k, rule.points[q]);
      acc += g.area * rule.weights[q] *
             (r.r1[0] * r.r1[0] + r.r1[1] * r.r1[1] + r.r2 * r.r2 + r.r3 * r.r3);
    }
  }
  return std::sqrt(acc);
}

FieldState advance_one_step(const Mesh& mesh, const CoefficientSet& coeffs,
                            const FieldState& state_n, SubscaleField& subs,
                            const StabConstants& stab_consts, const LinearOptions& linear,
                            int n_picard, double dt, double t_new) {
  FieldState frozen = state_n;  // convection/viscosity source for linearization
  FieldState state_new = state_n;
  const int iters = std::max(1, n_picard);
  for (int it = 0; it < iters; ++it) {
    const auto stab = compute_element_stabilization(mesh, frozen, coeffs, stab_consts, dt, t_new);
    AssemblyOptions opts;
    opts.linearization = &frozen;
    AssembledSystem sys = assemble_step(mesh, state_n, subs, coeffs, stab, dt, t_new, opts);
    apply_dirichlet(sys, mesh, coeffs, t_new);
    const Eigen::VectorXd x = solve_linear(sys.matrix, sys.rhs, linear);
    if (!x.allFinite()) throw std::runtime_error("advance_one_step: NaN in solution");
    const int n = mesh.n_nodes();
    state_new.u1 = x.segment(0, n);
    state_new.u2 = x.segment(n, n);
    state_new.p = x.segment(2 * n, n);
    state_new.c = x.segment(3 * n, n);
    state_new.t = t_new;
    shift_pressure_to_zero_mean(mesh, state_new);
    if (it + 1 == iters) {
      advance_subscales(mesh, subs, state_n, state_new, coeffs, stab, dt);
    } else {
      frozen.u1 = state_new.u1;
      frozen.u2 = state_new.u2;
      frozen.c = state_new.c;
    }
  }
  return state_new;
}

}  // namespace

TransientRun run_transient(const Mesh& mesh, const CoefficientSet& coeffs,
                           const std::optional<InitialCondition>& initial,
                           const TransientOptions& options,
                           const std::vector<StepObserver>& observers) {
  if (options.dt <= 0.0 || options.T <= 0.0) {
    throw std::invalid_argument("run_transient: dt and T must be positive");
  }
  const double ratio = options.T / options.dt;
  const int n_steps = static_cast<int>(std::lround(ratio));
  if (n_steps < 1 || std::abs(ratio - n_steps) > 1e-9 * n_steps) {
    throw std::invalid_argument("run_transient: T must be an integer multiple of dt");
  }

  FieldState state = initial ? interpolate_initial(mesh, *initial)
                             : FieldState::zeros(mesh.n_nodes(), 0.0);
  if (!initial) apply_boundary_values(mesh, coeffs, 0.0, state);

  TransientRun run;
  run.subscales = SubscaleField::zeros(mesh.n_elements(), triangle_quadrature_deg4().n());
  if (options.retain_trajectory) run.states.push_back(state);

  for (int n = 0; n < n_steps; ++n) {
    const double t_new = (n + 1) * options.dt;
    FieldState prev = state;
    try {
      state = advance_one_step(mesh, coeffs, prev, run.subscales, options.stab, options.linear,
                               options.n_picard, options.dt, t_new);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "run_transient: step " << n + 1 << " failed: " << e.what();
      throw std::runtime_error(os.str());
    }
    if (options.retain_trajectory) run.states.push_back(state);
    if (!observers.empty()) {
      StepInfo info;
      info.step = n + 1;
      info.state = &state;
      info.state_prev = &prev;
      info.subscales = &run.subscales;
      info.residual_l2 = residual_l2_norm(mesh, prev, state, coeffs, options.dt);
      for (const auto& obs : observers) obs(info);
    }
  }
  run.final_state = state;
  run.n_steps = n_steps;
  return run;
}

SteadyResult run_steady_cavity(const Mesh& mesh, const CoefficientSet& coeffs,
                               const SteadyOptions& options) {
  FieldState state = FieldState::zeros(mesh.n_nodes(), 0.0);
  apply_boundary_values(mesh, coeffs, 0.0, state);
  SubscaleField subs = SubscaleField::zeros(mesh.n_elements(), triangle_quadrature_deg4().n());

  SteadyResult result;
  for (int n = 0; n < options.max_steps; ++n) {
    const double t_new = (n + 1) * options.pseudo_dt;
    FieldState next = advance_one_step(mesh, coeffs, state, subs, options.stab, options.linear, 1,
                                       options.pseudo_dt, t_new);
    const double du = std::max((next.u1 - state.u1).lpNorm<Eigen::Infinity>(),
                               (next.u2 - state.u2).lpNorm<Eigen::Infinity>());
    result.update_history.push_back(du);
    state = next;
    result.steps = n + 1;
    if (du < options.tol_steady * options.pseudo_dt) {
      result.converged = true;
      break;
    }
  }
  result.state = state;
  return result;
}

}  // namespace vms

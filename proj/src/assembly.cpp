#include "vms/assembly.hpp"

#include <cmath>
#include <stdexcept>

namespace vms {

AssembledSystem assemble_step(const Mesh& mesh, const FieldState& state_prev,
                              const SubscaleField& subs_prev, const CoefficientSet& coeffs,
                              const std::vector<ElemStab>& stab, double dt, double t_new,
                              const AssemblyOptions& options) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  const double rho = coeffs.rho;
  const double alpha = coeffs.alpha;
  const double scale = options.include_stabilization ? options.stab_scale : 0.0;

  AssembledSystem sys;
  sys.dofs.n_nodes = mesh.n_nodes();
  const int n = sys.dofs.size();
  sys.rhs = Eigen::VectorXd::Zero(n);

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(mesh.n_elements()) * 144 + n);
  for (int d = 0; d < n; ++d) trips.emplace_back(d, d, 0.0);  // keep diagonals structural

  double local[12][12];
  double local_rhs[12];

  const FieldState& lin = options.linearization ? *options.linearization : state_prev;

  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry geo = element_geometry(mesh, k);
    const auto& tri = mesh.triangles[k];

    // element-constant pieces of the frozen linearization state
    const auto grad_u1n = eval_scalar_gradient(mesh, lin.u1, k);
    const auto grad_u2n = eval_scalar_gradient(mesh, lin.u2, k);
    const double div_an = grad_u1n[0] + grad_u2n[1];
    const double j2n = compute_j2({{grad_u1n, grad_u2n}});

    const double tb1 = scale * stab[k].tau_bar.tau_bar1;
    const double tau2 = scale * stab[k].tau.tau2;
    const double tb3 = scale * stab[k].tau_bar.tau_bar3;

    for (auto& row : local)
      for (auto& v : row) v = 0.0;
    for (auto& v : local_rhs) v = 0.0;

    for (int q = 0; q < rule.n(); ++q) {
      const auto& bary = rule.points[q];
      const auto xy = physical_point(mesh, k, bary);
      const double wq = geo.area * rule.weights[q];

      double a1 = 0.0, a2 = 0.0, c_lin = 0.0, u1n = 0.0, u2n = 0.0, cn = 0.0;
      for (int i = 0; i < 3; ++i) {
        a1 += bary[i] * lin.u1[tri[i]];
        a2 += bary[i] * lin.u2[tri[i]];
        c_lin += bary[i] * lin.c[tri[i]];
        u1n += bary[i] * state_prev.u1[tri[i]];
        u2n += bary[i] * state_prev.u2[tri[i]];
        cn += bary[i] * state_prev.c[tri[i]];
      }

      const double mu = effective_viscosity(coeffs.viscosity, c_lin, j2n);
      const double d1 = coeffs.D1(xy[0], xy[1], t_new);
      const double d2 = coeffs.D2(xy[0], xy[1], t_new);
      const double dd1x = coeffs.dD1_dx(xy[0], xy[1], t_new);
      const double dd2y = coeffs.dD2_dy(xy[0], xy[1], t_new);
      const double f1 = coeffs.fF1(xy[0], xy[1], t_new);
      const double f2 = coeffs.fF2(xy[0], xy[1], t_new);
      const double ft = coeffs.fT(xy[0], xy[1], t_new);
      if (!std::isfinite(mu) || !std::isfinite(d1) || !std::isfinite(d2) || !std::isfinite(f1) ||
          !std::isfinite(f2) || !std::isfinite(ft)) {
        throw std::runtime_error("assemble_step: non-finite coefficient evaluation");
      }

      const int sid = subs_prev.idx(k, q);
      const double su1 = subs_prev.u[sid][0];
      const double su2 = subs_prev.u[sid][1];
      const double sc = subs_prev.c[sid];

      double phi[3], adg[3];
      const auto& g = geo.grad;
      for (int i = 0; i < 3; ++i) {
        phi[i] = bary[i];
        adg[i] = a1 * g[i][0] + a2 * g[i][1];
      }

      // --- Galerkin ---
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double mass = wq * phi[i] * phi[j];
          const double conv = wq * phi[i] * (rho * adg[j] + 0.5 * rho * div_an * phi[j]);

          // momentum: transient + convection + 2 mu D(u):grad(v)
          local[0 + i][0 + j] += (rho / dt) * mass + conv +
                                 wq * mu * (2.0 * g[j][0] * g[i][0] + g[j][1] * g[i][1]);
          local[0 + i][3 + j] += wq * mu * g[j][0] * g[i][1];
          local[3 + i][0 + j] += wq * mu * g[j][1] * g[i][0];
          local[3 + i][3 + j] += (rho / dt) * mass + conv +
                                 wq * mu * (g[j][0] * g[i][0] + 2.0 * g[j][1] * g[i][1]);

          // pressure gradient and continuity
          local[0 + i][6 + j] += -wq * g[i][0] * phi[j];
          local[3 + i][6 + j] += -wq * g[i][1] * phi[j];
          local[6 + i][0 + j] += wq * phi[i] * g[j][0];
          local[6 + i][3 + j] += wq * phi[i] * g[j][1];

          // transport: transient + diffusion + convection + reaction
          local[9 + i][9 + j] += (1.0 / dt) * mass +
                                 wq * (d1 * g[j][0] * g[i][0] + d2 * g[j][1] * g[i][1]) +
                                 wq * phi[i] * adg[j] + alpha * mass;
        }
        local_rhs[0 + i] += wq * phi[i] * (f1 + (rho / dt) * u1n);
        local_rhs[3 + i] += wq * phi[i] * (f2 + (rho / dt) * u2n);
        local_rhs[9 + i] += wq * phi[i] * (ft + (1.0 / dt) * cn);
      }

      if (scale != 0.0) {
        // --- subscale coupling: momentum/pressure pair ---
        // trial coefficients of the subscale velocity components
        double sigma[3];  // multiplies u1_j (x comp) and u2_j (y comp)
        for (int j = 0; j < 3; ++j) sigma[j] = (rho / dt) * phi[j] + rho * adg[j];
        const double k1x = f1 + (rho / dt) * u1n + (rho / dt) * su1;
        const double k1y = f2 + (rho / dt) * u2n + (rho / dt) * su2;

        for (int i = 0; i < 3; ++i) {
          // test vectors paired with the velocity subscale:
          //   row u1_i -> (-rho*(a.grad phi_i), 0), row u2_i -> (0, same),
          //   row p_i  -> -grad phi_i
          const double wm = -rho * adg[i];
          for (int j = 0; j < 3; ++j) {
            local[0 + i][0 + j] += wq * (-tb1 * sigma[j]) * wm;
            local[3 + i][3 + j] += wq * (-tb1 * sigma[j]) * wm;
            local[0 + i][6 + j] += wq * (-tb1 * g[j][0]) * wm;
            local[3 + i][6 + j] += wq * (-tb1 * g[j][1]) * wm;

            local[6 + i][0 + j] += wq * (-tb1 * sigma[j]) * (-g[i][0]);
            local[6 + i][3 + j] += wq * (-tb1 * sigma[j]) * (-g[i][1]);
            local[6 + i][6 + j] += wq * tb1 * (g[j][0] * g[i][0] + g[j][1] * g[i][1]);
          }
          local_rhs[0 + i] -= wq * tb1 * k1x * wm;
          local_rhs[3 + i] -= wq * tb1 * k1y * wm;
          local_rhs[6 + i] -= wq * tb1 * (k1x * (-g[i][0]) + k1y * (-g[i][1]));

          // pressure subscale tested with -div v (grad-div term)
          for (int j = 0; j < 3; ++j) {
            local[0 + i][0 + j] += wq * tau2 * g[j][0] * g[i][0];
            local[0 + i][3 + j] += wq * tau2 * g[j][1] * g[i][0];
            local[3 + i][0 + j] += wq * tau2 * g[j][0] * g[i][1];
            local[3 + i][3 + j] += wq * tau2 * g[j][1] * g[i][1];
          }

          // concentration subscale tested with the transport adjoint
          const double wc = -adg[i] + alpha * phi[i] - (dd1x * g[i][0] + dd2y * g[i][1]);
          for (int j = 0; j < 3; ++j) {
            const double sigc = (1.0 / dt) * phi[j] + adg[j] + alpha * phi[j] -
                                dd1x * g[j][0] - dd2y * g[j][1];
            local[9 + i][9 + j] += wq * (-tb3 * sigc) * wc;
          }
          const double k3 = ft + (1.0 / dt) * cn + (1.0 / dt) * sc;
          local_rhs[9 + i] -= wq * tb3 * k3 * wc;
        }
      }
    }

    // scatter
    int gdof[12];
    for (int i = 0; i < 3; ++i) {
      gdof[0 + i] = sys.dofs.u1(tri[i]);
      gdof[3 + i] = sys.dofs.u2(tri[i]);
      gdof[6 + i] = sys.dofs.p(tri[i]);
      gdof[9 + i] = sys.dofs.c(tri[i]);
    }
    for (int i = 0; i < 12; ++i) {
      sys.rhs[gdof[i]] += local_rhs[i];
      for (int j = 0; j < 12; ++j) {
        // push the full local block so the global pattern is step-independent
        trips.emplace_back(gdof[i], gdof[j], local[i][j]);
      }
    }
  }

  sys.matrix.resize(n, n);
  sys.matrix.setFromTriplets(trips.begin(), trips.end());
  return sys;
}

void apply_dirichlet(AssembledSystem& sys, const Mesh& mesh, const CoefficientSet& coeffs,
                     double t_new, int pinned_pressure_node) {
  const int n = sys.dofs.size();
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  std::vector<double> value(static_cast<std::size_t>(n), 0.0);

  sys.constrained_rows.clear();
  for (int node = 0; node < mesh.n_nodes(); ++node) {
    if (!mesh.is_boundary(node)) continue;
    const double x = mesh.nodes[node][0];
    const double y = mesh.nodes[node][1];
    const int d1 = sys.dofs.u1(node);
    const int d2 = sys.dofs.u2(node);
    const int dc = sys.dofs.c(node);
    fixed[d1] = 1;
    value[d1] = coeffs.bc_u1(x, y, t_new);
    fixed[d2] = 1;
    value[d2] = coeffs.bc_u2(x, y, t_new);
    fixed[dc] = 1;
    value[dc] = coeffs.bc_c(x, y, t_new);
  }
  const int dp = sys.dofs.p(pinned_pressure_node);
  if (fixed[dp]) throw std::logic_error("apply_dirichlet: pinned pressure dof already constrained");
  fixed[dp] = 1;
  value[dp] = 0.0;

  for (int col = 0; col < sys.matrix.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.matrix, col); it; ++it) {
      const int row = static_cast<int>(it.row());
      if (fixed[row]) {
        it.valueRef() = (row == col) ? 1.0 : 0.0;
      } else if (fixed[col]) {
        sys.rhs[row] -= it.value() * value[col];
        it.valueRef() = 0.0;
      }
    }
  }
  for (int d = 0; d < n; ++d) {
    if (fixed[d]) {
      sys.rhs[d] = value[d];
      sys.constrained_rows.emplace_back(d, value[d]);
    }
  }
  sys.matrix.prune(0.0);
}

Eigen::SparseMatrix<double> assemble_convection_block(const Mesh& mesh, const FieldState& state_n,
                                                      double rho) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  const int n = mesh.n_nodes();
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(mesh.n_elements()) * 36);

  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry geo = element_geometry(mesh, k);
    const auto& tri = mesh.triangles[k];
    const auto grad_u1n = eval_scalar_gradient(mesh, state_n.u1, k);
    const auto grad_u2n = eval_scalar_gradient(mesh, state_n.u2, k);
    const double div_an = grad_u1n[0] + grad_u2n[1];

    for (int q = 0; q < rule.n(); ++q) {
      const auto& bary = rule.points[q];
      const double wq = geo.area * rule.weights[q];
      double a1 = 0.0, a2 = 0.0;
      for (int i = 0; i < 3; ++i) {
        a1 += bary[i] * state_n.u1[tri[i]];
        a2 += bary[i] * state_n.u2[tri[i]];
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          const double adgj = a1 * geo.grad[j][0] + a2 * geo.grad[j][1];
          const double val = wq * bary[i] * (rho * adgj + 0.5 * rho * div_an * bary[j]);
          trips.emplace_back(tri[i], tri[j], val);
          trips.emplace_back(n + tri[i], n + tri[j], val);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> conv(2 * n, 2 * n);
  conv.setFromTriplets(trips.begin(), trips.end());
  return conv;
}

}  // namespace vms

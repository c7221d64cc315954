#include "vms/stabilization.hpp"

#include <cmath>
#include <stdexcept>

namespace vms {

TauSet compute_tau(double h, double speed, double eta0, double rho, double d_m, double alpha,
                   const StabConstants& consts) {
  if (h <= 0.0) throw std::invalid_argument("compute_tau: h must be positive");
  TauSet t;
  const double den1 = consts.c1 * eta0 / (h * h) + consts.c2 * rho * speed / h;
  const double den3 = 9.0 * d_m / (4.0 * h * h) + 1.5 * speed / h + alpha;
  if (den1 <= 0.0 || den3 <= 0.0) {
    throw std::invalid_argument("compute_tau: degenerate parameters, tau would be infinite");
  }
  t.tau1 = 1.0 / den1;
  t.tau2 = h * h / (consts.c1 * t.tau1);
  t.tau3 = consts.c3 / den3;
  return t;
}

TauBarSet compute_tau_bar(const TauSet& tau, double rho, double dt) {
  TauBarSet b;
  b.tau_bar1 = tau.tau1 * dt / (dt + rho * tau.tau1);
  b.tau_bar2 = tau.tau2;
  b.tau_bar3 = tau.tau3 * dt / (dt + tau.tau3);
  return b;
}

std::vector<ElemStab> compute_element_stabilization(const Mesh& mesh, const FieldState& state_prev,
                                                    const CoefficientSet& coeffs,
                                                    const StabConstants& consts, double dt,
                                                    double t_new) {
  const std::array<double, 3> centroid = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  std::vector<ElemStab> out(static_cast<std::size_t>(mesh.n_elements()));
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const FieldSample s = eval_field_at_qp(mesh, state_prev, k, centroid);
    const auto xy = physical_point(mesh, k, centroid);
    ElemStab& e = out[k];
    e.speed = std::sqrt(s.u1 * s.u1 + s.u2 * s.u2);
    const double j2 = compute_j2({{s.grad_u1, s.grad_u2}});
    e.eta0 = 2.0 * effective_viscosity(coeffs.viscosity, s.c, j2);
    e.d_m = std::max(std::abs(coeffs.D1(xy[0], xy[1], t_new)),
                     std::abs(coeffs.D2(xy[0], xy[1], t_new)));
    e.tau = compute_tau(mesh.h_k[k], e.speed, e.eta0, coeffs.rho, e.d_m, coeffs.alpha, consts);
    e.tau_bar = compute_tau_bar(e.tau, coeffs.rho, dt);
  }
  return out;
}

ResidualSample strong_residual(const Mesh& mesh, const FieldState& state_prev,
                               const FieldState& state_new, const CoefficientSet& coeffs,
                               double dt, int k, const std::array<double, 3>& bary) {
  const FieldSample sn = eval_field_at_qp(mesh, state_new, k, bary);
  const FieldSample sp = eval_field_at_qp(mesh, state_prev, k, bary);
  const auto xy = physical_point(mesh, k, bary);
  const double t_new = state_new.t;
  const double rho = coeffs.rho;

  const double f1 = coeffs.fF1(xy[0], xy[1], t_new);
  const double f2 = coeffs.fF2(xy[0], xy[1], t_new);
  const double ft = coeffs.fT(xy[0], xy[1], t_new);
  if (!std::isfinite(f1) || !std::isfinite(f2) || !std::isfinite(ft)) {
    throw std::runtime_error("strong_residual: non-finite forcing evaluation");
  }

  ResidualSample r;
  r.r1[0] = f1 - rho * (sn.u1 - sp.u1) / dt -
            rho * (sp.u1 * sn.grad_u1[0] + sp.u2 * sn.grad_u1[1]) - sn.grad_p[0];
  r.r1[1] = f2 - rho * (sn.u2 - sp.u2) / dt -
            rho * (sp.u1 * sn.grad_u2[0] + sp.u2 * sn.grad_u2[1]) - sn.grad_p[1];
  r.r2 = -(sn.grad_u1[0] + sn.grad_u2[1]);
  const double dd1 = coeffs.dD1_dx(xy[0], xy[1], t_new);
  const double dd2 = coeffs.dD2_dy(xy[0], xy[1], t_new);
  r.r3 = ft - (sn.c - sp.c) / dt - (sp.u1 * sn.grad_c[0] + sp.u2 * sn.grad_c[1]) -
         coeffs.alpha * sn.c + dd1 * sn.grad_c[0] + dd2 * sn.grad_c[1];
  return r;
}

SubscaleField SubscaleField::zeros(int n_el, int n_qp) {
  SubscaleField s;
  s.n_el = n_el;
  s.n_qp = n_qp;
  s.u.assign(static_cast<std::size_t>(n_el) * n_qp, {0.0, 0.0});
  s.p.assign(static_cast<std::size_t>(n_el) * n_qp, 0.0);
  s.c.assign(static_cast<std::size_t>(n_el) * n_qp, 0.0);
  return s;
}

double advance_subscale_scalar(double old_value, double residual, double tau_bar, double m,
                               double dt) {
  return tau_bar * (residual + (m / dt) * old_value);
}

void advance_subscales(const Mesh& mesh, SubscaleField& subs, const FieldState& state_prev,
                       const FieldState& state_new, const CoefficientSet& coeffs,
                       const std::vector<ElemStab>& stab, double dt) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const TauBarSet& tb = stab[k].tau_bar;
    const double tau2 = stab[k].tau.tau2;
    for (int q = 0; q < rule.n(); ++q) {
      const ResidualSample r = strong_residual(mesh, state_prev, state_new, coeffs, dt, k,
                                               rule.points[q]);
      const int id = subs.idx(k, q);
      subs.u[id][0] = advance_subscale_scalar(subs.u[id][0], r.r1[0], tb.tau_bar1, coeffs.rho, dt);
      subs.u[id][1] = advance_subscale_scalar(subs.u[id][1], r.r1[1], tb.tau_bar1, coeffs.rho, dt);
      subs.p[id] = tau2 * r.r2;
      subs.c[id] = advance_subscale_scalar(subs.c[id], r.r3, tb.tau_bar3, 1.0, dt);
    }
  }
}

}  // namespace vms

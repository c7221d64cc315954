#include "vms/verification.hpp"

#include <cmath>
#include <stdexcept>

namespace vms {

void PbarAccumulator::add_level(double l2_sq, double gx_sq, double gy_sq, double dt) {
  max_l2_sq = std::max(max_l2_sq, l2_sq);
  accum_h1_sq += dt * (l2_sq + gx_sq + gy_sq);
}

namespace {

struct LevelErrors {
  double u_l2_sq = 0.0, u_gx_sq = 0.0, u_gy_sq = 0.0;
  double c_l2_sq = 0.0, c_gx_sq = 0.0, c_gy_sq = 0.0;
  double p_l2_sq = 0.0, p_gx_sq = 0.0, p_gy_sq = 0.0;
};

LevelErrors level_errors(const Mesh& mesh, const FieldState& state,
                         const ManufacturedSolution& exact) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  const double t = state.t;

  // match the discrete pressure mean to the exact one (|Omega| = 1)
  double p_shift = 0.0;
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    for (int q = 0; q < rule.n(); ++q) {
      const auto xy = physical_point(mesh, k, rule.points[q]);
      const double ph = eval_scalar_at_qp(mesh, state.p, k, rule.points[q]);
      p_shift += g.area * rule.weights[q] * (ph - exact.p(xy[0], xy[1], t).v);
    }
  }

  LevelErrors e;
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    for (int q = 0; q < rule.n(); ++q) {
      const auto& bary = rule.points[q];
      const auto xy = physical_point(mesh, k, bary);
      const double w = g.area * rule.weights[q];
      const FieldSample s = eval_field_at_qp(mesh, state, k, bary);

      const ExactValue eu1 = exact.u1(xy[0], xy[1], t);
      const ExactValue eu2 = exact.u2(xy[0], xy[1], t);
      const ExactValue ec = exact.c(xy[0], xy[1], t);
      const ExactValue ep = exact.p(xy[0], xy[1], t);

      const double du1 = s.u1 - eu1.v;
      const double du2 = s.u2 - eu2.v;
      e.u_l2_sq += w * (du1 * du1 + du2 * du2);
      const double gu1x = s.grad_u1[0] - eu1.grad[0];
      const double gu1y = s.grad_u1[1] - eu1.grad[1];
      const double gu2x = s.grad_u2[0] - eu2.grad[0];
      const double gu2y = s.grad_u2[1] - eu2.grad[1];
      e.u_gx_sq += w * (gu1x * gu1x + gu2x * gu2x);
      e.u_gy_sq += w * (gu1y * gu1y + gu2y * gu2y);

      const double dc = s.c - ec.v;
      e.c_l2_sq += w * dc * dc;
      const double gcx = s.grad_c[0] - ec.grad[0];
      const double gcy = s.grad_c[1] - ec.grad[1];
      e.c_gx_sq += w * gcx * gcx;
      e.c_gy_sq += w * gcy * gcy;

      const double dp = s.p - ep.v - p_shift;
      e.p_l2_sq += w * dp * dp;
      const double gpx = s.grad_p[0] - ep.grad[0];
      const double gpy = s.grad_p[1] - ep.grad[1];
      e.p_gx_sq += w * gpx * gpx;
      e.p_gy_sq += w * gpy * gpy;
    }
  }
  return e;
}

}  // namespace

ErrorReport trajectory_error_norms(const Mesh& mesh, const TransientRun& run,
                                   const ManufacturedSolution& exact, double dt) {
  if (static_cast<int>(run.states.size()) != run.n_steps + 1) {
    throw std::invalid_argument(
        "trajectory_error_norms: run must retain all time levels (retain_trajectory)");
  }
  PbarAccumulator pu, pc;
  QbarAccumulator qp;
  for (int n = 1; n <= run.n_steps; ++n) {
    const LevelErrors e = level_errors(mesh, run.states[n], exact);
    pu.add_level(e.u_l2_sq, e.u_gx_sq, e.u_gy_sq, dt);
    pc.add_level(e.c_l2_sq, e.c_gx_sq, e.c_gy_sq, dt);
    qp.add_level(e.p_l2_sq + e.p_gx_sq + e.p_gy_sq, dt);
  }
  ErrorReport r;
  r.e_u = std::sqrt(pu.norm_sq());
  r.e_c = std::sqrt(pc.norm_sq());
  r.e_p = std::sqrt(qp.norm_sq());
  r.total = std::sqrt(r.e_u * r.e_u + r.e_p * r.e_p + r.e_c * r.e_c);
  r.total_sum = r.e_u + r.e_p + r.e_c;
  return r;
}

std::vector<RocRow> roc_table(const std::vector<std::pair<int, ErrorReport>>& reports,
                              const std::string& label) {
  std::vector<RocRow> rows;
  rows.reserve(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    RocRow row;
    row.label = label;
    row.inv_h = reports[i].first;
    row.dt = 1.0 / reports[i].first;
    row.err = reports[i].second;
    if (i > 0) {
      const ErrorReport& coarse = reports[i - 1].second;
      const ErrorReport& fine = reports[i].second;
      const auto roc = [](double ec, double ef) { return std::log2(ec / ef); };
      row.roc_u = roc(coarse.e_u, fine.e_u);
      row.roc_c = roc(coarse.e_c, fine.e_c);
      row.roc_p = roc(coarse.e_p, fine.e_p);
      row.roc_total = roc(coarse.total, fine.total);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> error_indicator(const Mesh& mesh, const FieldState& state_prev,
                                    const FieldState& state_new, const CoefficientSet& coeffs,
                                    double dt) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  std::vector<double> eta(static_cast<std::size_t>(mesh.n_elements()), 0.0);
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    double acc = 0.0;
    for (int q = 0; q < rule.n(); ++q) {
      const ResidualSample r =
          strong_residual(mesh, state_prev, state_new, coeffs, dt, k, rule.points[q]);
      acc += g.area * rule.weights[q] *
             (r.r1[0] * r.r1[0] + r.r1[1] * r.r1[1] + r.r2 * r.r2 + r.r3 * r.r3);
    }
    eta[k] = mesh.h_k[k] * std::sqrt(acc);
  }
  return eta;
}

}  // namespace vms

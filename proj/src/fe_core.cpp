#include "vms/fe_core.hpp"

#include <algorithm>
#include <cmath>

namespace vms {

const QuadratureRule& triangle_quadrature_deg4() {
  static const QuadratureRule rule = [] {
    QuadratureRule r;
    const double a = 0.445948490915965;
    const double wa = 0.223381589678011;
    const double b = 0.091576213509771;
    const double wb = 0.109951743655322;
    r.points = {
        {1.0 - 2.0 * a, a, a}, {a, 1.0 - 2.0 * a, a}, {a, a, 1.0 - 2.0 * a},
        {1.0 - 2.0 * b, b, b}, {b, 1.0 - 2.0 * b, b}, {b, b, 1.0 - 2.0 * b},
    };
    r.weights = {wa, wa, wa, wb, wb, wb};
    return r;
  }();
  return rule;
}

FieldState FieldState::zeros(int n_nodes, double t) {
  FieldState s;
  s.u1 = Eigen::VectorXd::Zero(n_nodes);
  s.u2 = Eigen::VectorXd::Zero(n_nodes);
  s.p = Eigen::VectorXd::Zero(n_nodes);
  s.c = Eigen::VectorXd::Zero(n_nodes);
  s.t = t;
  return s;
}

std::array<double, 2> physical_point(const Mesh& mesh, int k, const std::array<double, 3>& bary) {
  const auto& tri = mesh.triangles[k];
  double x = 0.0, y = 0.0;
  for (int i = 0; i < 3; ++i) {
    x += bary[i] * mesh.nodes[tri[i]][0];
    y += bary[i] * mesh.nodes[tri[i]][1];
  }
  return {x, y};
}

double eval_scalar_at_qp(const Mesh& mesh, const Eigen::VectorXd& nodal, int k,
                         const std::array<double, 3>& bary) {
  const auto& tri = mesh.triangles[k];
  return bary[0] * nodal[tri[0]] + bary[1] * nodal[tri[1]] + bary[2] * nodal[tri[2]];
}

std::array<double, 2> eval_scalar_gradient(const Mesh& mesh, const Eigen::VectorXd& nodal, int k) {
  const ElementGeometry g = element_geometry(mesh, k);
  const auto& tri = mesh.triangles[k];
  std::array<double, 2> grad = {0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    grad[0] += nodal[tri[i]] * g.grad[i][0];
    grad[1] += nodal[tri[i]] * g.grad[i][1];
  }
  return grad;
}

FieldSample eval_field_at_qp(const Mesh& mesh, const FieldState& state, int k,
                             const std::array<double, 3>& bary) {
  const ElementGeometry g = element_geometry(mesh, k);
  const auto& tri = mesh.triangles[k];
  FieldSample s{};
  s.u1 = s.u2 = s.p = s.c = 0.0;
  s.grad_u1 = s.grad_u2 = s.grad_p = s.grad_c = {0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    const int n = tri[i];
    s.u1 += bary[i] * state.u1[n];
    s.u2 += bary[i] * state.u2[n];
    s.p += bary[i] * state.p[n];
    s.c += bary[i] * state.c[n];
    for (int d = 0; d < 2; ++d) {
      s.grad_u1[d] += state.u1[n] * g.grad[i][d];
      s.grad_u2[d] += state.u2[n] * g.grad[i][d];
      s.grad_p[d] += state.p[n] * g.grad[i][d];
      s.grad_c[d] += state.c[n] * g.grad[i][d];
    }
  }
  return s;
}

double eval_scalar_at_point(const Mesh& mesh, const Eigen::VectorXd& nodal, double x, double y) {
  const int n = mesh.n_div;
  const double xc = std::clamp(x, 0.0, 1.0);
  const double yc = std::clamp(y, 0.0, 1.0);
  const int i = std::min(static_cast<int>(xc * n), n - 1);
  const int j = std::min(static_cast<int>(yc * n), n - 1);
  // cell (i,j) holds elements 2*(j*n+i) and 2*(j*n+i)+1; pick by diagonal side
  const double lx = xc * n - i;
  const double ly = yc * n - j;
  const int k = 2 * (j * n + i) + (ly > lx ? 1 : 0);

  const auto& tri = mesh.triangles[k];
  const auto& p0 = mesh.nodes[tri[0]];
  const auto& p1 = mesh.nodes[tri[1]];
  const auto& p2 = mesh.nodes[tri[2]];
  const double det = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]);
  const double l1 = ((xc - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (yc - p0[1])) / det;
  const double l2 = ((p1[0] - p0[0]) * (yc - p0[1]) - (xc - p0[0]) * (p1[1] - p0[1])) / det;
  const double l0 = 1.0 - l1 - l2;
  return l0 * nodal[tri[0]] + l1 * nodal[tri[1]] + l2 * nodal[tri[2]];
}

double integrate_scalar(const Mesh& mesh,
                        const std::function<double(double, double, int)>& density) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  double total = 0.0;
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    double acc = 0.0;
    for (int q = 0; q < rule.n(); ++q) {
      const auto xy = physical_point(mesh, k, rule.points[q]);
      acc += rule.weights[q] * density(xy[0], xy[1], k);
    }
    total += g.area * acc;
  }
  return total;
}

std::pair<double, double> l2_and_h1_seminorm(const Mesh& mesh, const Eigen::VectorXd& nodal,
                                             const std::optional<ExactScalar>& exact) {
  const QuadratureRule& rule = triangle_quadrature_deg4();
  double l2_sq = 0.0;
  double h1_sq = 0.0;
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    const auto grad_h = eval_scalar_gradient(mesh, nodal, k);
    for (int q = 0; q < rule.n(); ++q) {
      const auto xy = physical_point(mesh, k, rule.points[q]);
      double diff = eval_scalar_at_qp(mesh, nodal, k, rule.points[q]);
      std::array<double, 2> gdiff = grad_h;
      if (exact) {
        diff -= exact->value(xy[0], xy[1]);
        const auto ge = exact->grad(xy[0], xy[1]);
        gdiff[0] -= ge[0];
        gdiff[1] -= ge[1];
      }
      const double w = g.area * rule.weights[q];
      l2_sq += w * diff * diff;
      h1_sq += w * (gdiff[0] * gdiff[0] + gdiff[1] * gdiff[1]);
    }
  }
  return {std::sqrt(l2_sq), std::sqrt(h1_sq)};
}

}  // namespace vms

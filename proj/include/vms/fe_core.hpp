#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "vms/mesh.hpp"

namespace vms {

// Barycentric quadrature rule on the reference triangle; weights are
// normalized to sum to 1, so a physical integral is area_k * sum(w_q * f_q).
struct QuadratureRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int n() const { return static_cast<int>(points.size()); }
};

// 6-point rule, exact for polynomials up to degree 4.
const QuadratureRule& triangle_quadrature_deg4();

// Nodal P1 coefficients of the coupled unknowns at one time level.
struct FieldState {
  Eigen::VectorXd u1, u2, p, c;
  double t = 0.0;

  static FieldState zeros(int n_nodes, double t = 0.0);
};

struct FieldSample {
  double u1, u2, p, c;
  std::array<double, 2> grad_u1, grad_u2, grad_p, grad_c;
};

std::array<double, 2> physical_point(const Mesh& mesh, int k, const std::array<double, 3>& bary);

double eval_scalar_at_qp(const Mesh& mesh, const Eigen::VectorXd& nodal, int k,
                         const std::array<double, 3>& bary);

std::array<double, 2> eval_scalar_gradient(const Mesh& mesh, const Eigen::VectorXd& nodal, int k);

FieldSample eval_field_at_qp(const Mesh& mesh, const FieldState& state, int k,
                             const std::array<double, 3>& bary);

// Evaluate a P1 nodal field at an arbitrary point of the unit square
// (structured cell lookup, no search).
double eval_scalar_at_point(const Mesh& mesh, const Eigen::VectorXd& nodal, double x, double y);

// density(x, y, k) integrated with the default rule.
double integrate_scalar(const Mesh& mesh,
                        const std::function<double(double, double, int)>& density);

// Scalar field with an analytic gradient, used for error norms.
struct ExactScalar {
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> grad;
};

// L2 norm and H1 seminorm of the field, or of (field - exact) when given.
std::pair<double, double> l2_and_h1_seminorm(const Mesh& mesh, const Eigen::VectorXd& nodal,
                                             const std::optional<ExactScalar>& exact = std::nullopt);

}  // namespace vms

#include "vms/cavity_post.hpp"

#include <cmath>

namespace vms {

StreamFunctionField compute_streamfunction(const Mesh& mesh, const FieldState& state,
                                           const LinearOptions& linear) {
  const int n = mesh.n_nodes();

  // nodal vorticity by area-weighted lumping of elementwise-constant gradients
  Eigen::VectorXd omega = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd lump = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    const auto gu1 = eval_scalar_gradient(mesh, state.u1, k);
    const auto gu2 = eval_scalar_gradient(mesh, state.u2, k);
    const double w_k = gu2[0] - gu1[1];
    for (int i = 0; i < 3; ++i) {
      const int node = mesh.triangles[k][i];
      omega[node] += g.area * w_k;
      lump[node] += g.area;
    }
  }
  for (int i = 0; i < n; ++i) omega[i] /= lump[i];

  // P1 stiffness with consistent load, psi = 0 on the boundary
  std::vector<Eigen::Triplet<double>> trips;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) trips.emplace_back(i, i, 0.0);
  for (int k = 0; k < mesh.n_elements(); ++k) {
    const ElementGeometry g = element_geometry(mesh, k);
    const auto& tri = mesh.triangles[k];
    for (int i = 0; i < 3; ++i) {
      // exact integral of omega_h * phi_i over the element (both P1)
      double load = 0.0;
      for (int j = 0; j < 3; ++j) {
        load += omega[tri[j]] * g.area * ((i == j) ? 2.0 : 1.0) / 12.0;
      }
      rhs[tri[i]] += load;
      for (int j = 0; j < 3; ++j) {
        trips.emplace_back(tri[i], tri[j],
                           g.area * (g.grad[i][0] * g.grad[j][0] + g.grad[i][1] * g.grad[j][1]));
      }
    }
  }
  Eigen::SparseMatrix<double> stiff(n, n);
  stiff.setFromTriplets(trips.begin(), trips.end());

  for (int col = 0; col < stiff.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(stiff, col); it; ++it) {
      const int row = static_cast<int>(it.row());
      if (mesh.is_boundary(row)) {
        it.valueRef() = (row == col) ? 1.0 : 0.0;
      } else if (mesh.is_boundary(col)) {
        it.valueRef() = 0.0;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (mesh.is_boundary(i)) rhs[i] = 0.0;
  }

  StreamFunctionField out;
  out.psi = solve_linear(stiff, rhs, linear);
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(out.psi[i]) > best) {
      best = std::abs(out.psi[i]);
      out.extremum_node = i;
    }
  }
  out.extremum_value = out.psi[out.extremum_node];
  out.extremum_xy = mesh.nodes[out.extremum_node];
  return out;
}

CenterlineProfiles centerline_profiles(const Mesh& mesh, const FieldState& state) {
  CenterlineProfiles prof;
  const int n = mesh.n_div;
  prof.y.reserve(n + 1);
  prof.u1_mid.reserve(n + 1);
  prof.x.reserve(n + 1);
  prof.u2_mid.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double s = static_cast<double>(j) / n;
    prof.y.push_back(s);
    prof.u1_mid.push_back(eval_scalar_at_point(mesh, state.u1, 0.5, s));
    prof.x.push_back(s);
    prof.u2_mid.push_back(eval_scalar_at_point(mesh, state.u2, s, 0.5));
  }
  return prof;
}

}  // namespace vms

#include <doctest.h>

#include <cmath>
#include <random>

#include "vms/assembly.hpp"
#include "vms/solver.hpp"

using namespace vms;

namespace {

struct Setup {
  Mesh mesh;
  FieldState state;
  SubscaleField subs;
  CoefficientSet coeffs;
  std::vector<ElemStab> stab;
  double dt = 0.1;
};

Setup make_setup(int n_div, double dt = 0.1) {
  Setup s{build_structured_mesh(n_div), {}, {}, {}, {}, dt};
  s.state = FieldState::zeros(s.mesh.n_nodes());
  s.subs = SubscaleField::zeros(s.mesh.n_elements(), triangle_quadrature_deg4().n());
  s.coeffs.viscosity.eta_bar = 0.01;
  s.coeffs.D1 = constant_field(0.01);
  s.coeffs.D2 = constant_field(0.01);
  s.coeffs.alpha = 0.01;
  s.stab = compute_element_stabilization(s.mesh, s.state, s.coeffs, StabConstants{}, dt, dt);
  return s;
}

}  // namespace

TEST_CASE("zero-data Stokes-like step solves to the zero state") {
  Setup s = make_setup(4);
  AssembledSystem sys =
      assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  // rhs before constraints holds only subscale-history loads, all zero here
  CHECK(sys.rhs.lpNorm<Eigen::Infinity>() == 0.0);
  apply_dirichlet(sys, s.mesh, s.coeffs, s.dt);
  const Eigen::VectorXd x = solve_linear(sys.matrix, sys.rhs);
  CHECK(x.lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("convection block is skew symmetric on interior probes") {
  Setup s = make_setup(5);
  // nonzero frozen velocity field
  for (int i = 0; i < s.mesh.n_nodes(); ++i) {
    const double x = s.mesh.nodes[i][0], y = s.mesh.nodes[i][1];
    s.state.u1[i] = std::sin(x) * y;
    s.state.u2[i] = x - y * y;
  }
  const Eigen::SparseMatrix<double> conv = assemble_convection_block(s.mesh, s.state, 1.0);
  std::mt19937 rng(11);
  std::normal_distribution<double> dist;
  const int n = s.mesh.n_nodes();
  for (int probe = 0; probe < 5; ++probe) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * n);
    for (int i = 0; i < n; ++i) {
      if (!s.mesh.is_boundary(i)) {
        v[i] = dist(rng);
        v[n + i] = dist(rng);
      }
    }
    const double q = v.dot(conv * v);
    CHECK(std::abs(q) <= 1e-12 * v.squaredNorm());
  }
}

TEST_CASE("stab_scale 0 recovers the Galerkin system exactly") {
  Setup s = make_setup(2);
  AssemblyOptions no_stab;
  no_stab.include_stabilization = false;
  AssemblyOptions zero_scale;
  zero_scale.stab_scale = 0.0;
  const AssembledSystem a =
      assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt, no_stab);
  const AssembledSystem b =
      assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt, zero_scale);
  const AssembledSystem full =
      assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  CHECK((a.matrix - b.matrix).norm() == 0.0);
  // the full system differs from Galerkin exactly by the stabilization terms
  CHECK((full.matrix - a.matrix).norm() > 0.0);
}

TEST_CASE("assembly is bitwise deterministic") {
  Setup s = make_setup(3);
  for (int i = 0; i < s.mesh.n_nodes(); ++i) {
    s.state.u1[i] = 0.3 * s.mesh.nodes[i][0];
    s.state.c[i] = s.mesh.nodes[i][1];
  }
  const AssembledSystem a = assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  const AssembledSystem b = assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  CHECK((a.rhs - b.rhs).lpNorm<Eigen::Infinity>() == 0.0);
  Eigen::SparseMatrix<double> d = a.matrix - b.matrix;
  CHECK(d.norm() == 0.0);
}

TEST_CASE("matrix pattern is independent of the state") {
  Setup s = make_setup(3);
  const AssembledSystem a = assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  Setup s2 = make_setup(3);
  for (int i = 0; i < s2.mesh.n_nodes(); ++i) {
    s2.state.u1[i] = std::cos(7.0 * i);
    s2.state.u2[i] = std::sin(3.0 * i);
    s2.state.c[i] = 0.5;
  }
  s2.stab = compute_element_stabilization(s2.mesh, s2.state, s2.coeffs, StabConstants{}, s2.dt,
                                          s2.dt);
  const AssembledSystem b =
      assemble_step(s2.mesh, s2.state, s2.subs, s2.coeffs, s2.stab, s2.dt, s2.dt);
  REQUIRE(a.matrix.nonZeros() == b.matrix.nonZeros());
  for (int i = 0; i <= a.matrix.outerSize(); ++i) {
    CHECK(a.matrix.outerIndexPtr()[i] == b.matrix.outerIndexPtr()[i]);
  }
  for (int i = 0; i < a.matrix.nonZeros(); ++i) {
    CHECK(a.matrix.innerIndexPtr()[i] == b.matrix.innerIndexPtr()[i]);
  }
}

TEST_CASE("dirichlet rows become identity with the boundary value") {
  Setup s = make_setup(3);
  s.coeffs.bc_u1 = [](double, double y, double) { return y >= 1.0 ? 1.0 : 0.0; };
  AssembledSystem sys = assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  apply_dirichlet(sys, s.mesh, s.coeffs, s.dt);
  for (const auto& [dof, value] : sys.constrained_rows) {
    CHECK(sys.rhs[dof] == value);
    int entries = 0;
    for (int col = 0; col < sys.matrix.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(sys.matrix, col); it; ++it) {
        if (static_cast<int>(it.row()) == dof && it.value() != 0.0) {
          ++entries;
          CHECK(static_cast<int>(it.col()) == dof);
          CHECK(it.value() == 1.0);
        }
      }
    }
    CHECK(entries == 1);
  }
  // lid corners take the lid value
  for (int i = 0; i < s.mesh.n_nodes(); ++i) {
    if (s.mesh.on_side(i, side_top)) {
      CHECK(sys.rhs[sys.dofs.u1(i)] == 1.0);
    }
  }
}

TEST_CASE("all-zero boundary data gives zero constrained rhs entries") {
  Setup s = make_setup(2);
  AssembledSystem sys = assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt);
  apply_dirichlet(sys, s.mesh, s.coeffs, s.dt);
  for (const auto& [dof, value] : sys.constrained_rows) {
    CHECK(value == 0.0);
    CHECK(sys.rhs[dof] == 0.0);
  }
}

TEST_CASE("non-finite coefficients are rejected") {
  Setup s = make_setup(2);
  s.coeffs.fT = [](double, double, double) { return std::nan(""); };
  CHECK_THROWS(assemble_step(s.mesh, s.state, s.subs, s.coeffs, s.stab, s.dt, s.dt));
}

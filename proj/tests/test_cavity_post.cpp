#include <doctest.h>

#include <cmath>

#include "vms/cavity_post.hpp"

using namespace vms;

TEST_CASE("streamfunction of a rigid rotation") {
  // u = (-(y-1/2), x-1/2) has vorticity 2; psi solves -Lap(psi) = 2 with
  // psi = 0 on the boundary. Oracle: solve the same Poisson problem by a
  // truncated double sine series, independent of the FE code.
  const Mesh mesh = build_structured_mesh(24);
  FieldState st = FieldState::zeros(mesh.n_nodes());
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    st.u1[i] = -(mesh.nodes[i][1] - 0.5);
    st.u2[i] = mesh.nodes[i][0] - 0.5;
  }
  const StreamFunctionField psi = compute_streamfunction(mesh, st);

  auto series = [](double x, double y) {
    double acc = 0.0;
    for (int m = 1; m <= 41; m += 2) {
      for (int n = 1; n <= 41; n += 2) {
        const double denom = M_PI * M_PI * (m * m + n * n);
        const double coef = 2.0 * 16.0 / (M_PI * M_PI * m * n) / denom;
        acc += coef * std::sin(m * M_PI * x) * std::sin(n * M_PI * y);
      }
    }
    return acc;
  };
  // center value of the oracle ~ 0.0737; compare at a few interior nodes
  for (const auto& pt : {std::array<double, 2>{0.5, 0.5}, {0.25, 0.5}, {0.5, 0.75}}) {
    const int i = static_cast<int>(pt[1] * mesh.n_div + 0.5) * (mesh.n_div + 1) +
                  static_cast<int>(pt[0] * mesh.n_div + 0.5);
    CHECK(psi.psi[i] == doctest::Approx(series(pt[0], pt[1])).epsilon(0.02));
  }
  // extremum at the center for this symmetric field
  CHECK(psi.extremum_xy[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(psi.extremum_xy[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(psi.extremum_value == doctest::Approx(series(0.5, 0.5)).epsilon(0.02));
}

TEST_CASE("streamfunction of zero velocity is zero") {
  const Mesh mesh = build_structured_mesh(8);
  const FieldState st = FieldState::zeros(mesh.n_nodes());
  const StreamFunctionField psi = compute_streamfunction(mesh, st);
  CHECK(psi.psi.lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("centerline profiles sample the nodal fields") {
  const Mesh mesh = build_structured_mesh(8);
  FieldState st = FieldState::zeros(mesh.n_nodes());
  for (int i = 0; i < mesh.n_nodes(); ++i) {
    st.u1[i] = mesh.nodes[i][1];          // u1 = y
    st.u2[i] = 2.0 * mesh.nodes[i][0];    // u2 = 2x
  }
  const CenterlineProfiles prof = centerline_profiles(mesh, st);
  REQUIRE(prof.y.size() == 9);
  REQUIRE(prof.x.size() == 9);
  for (std::size_t j = 0; j < prof.y.size(); ++j) {
    CHECK(prof.u1_mid[j] == doctest::Approx(prof.y[j]).epsilon(1e-13));
    CHECK(prof.u2_mid[j] == doctest::Approx(2.0 * prof.x[j]).epsilon(1e-13));
  }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "vms/rheology.hpp"

using namespace vms;

TEST_CASE("J2 hand values") {
  CHECK(compute_j2({{{0.0, 0.0}, {0.0, 0.0}}}) == 0.0);
  // u = (y, 0): only du1/dy = 1
  CHECK(compute_j2({{{0.0, 1.0}, {0.0, 0.0}}}) == doctest::Approx(1.0).epsilon(1e-15));
  // u = (x, -y): diagonal (1, -1)
  CHECK(compute_j2({{{1.0, 0.0}, {0.0, -1.0}}}) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("yield-free viscosity returns eta(c) exactly") {
  ViscosityModel m;
  m.variant = ViscosityVariant::constant;
  m.eta_bar = 1.0;
  m.tau_y = 0.0;
  for (double j2 : {0.0, 1e-8, 0.3, 7.0, 1e6}) {
    CHECK(effective_viscosity(m, 0.0, j2) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("yield-free identity over 1000 random samples") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> cdist(-2.0, 4.0);
  std::uniform_real_distribution<double> jdist(0.0, 10.0);
  ViscosityModel lin;
  lin.variant = ViscosityVariant::linear_c;
  lin.eta0_p = 0.16;
  lin.K = 0.25;
  lin.tau_y = 0.0;
  ViscosityModel ex;
  ex.variant = ViscosityVariant::exp_c;
  ex.A = 0.129;
  ex.B = 0.101;
  ex.tau_y = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double c = cdist(rng);
    const double j2 = jdist(rng);
    for (const auto& m : {lin, ex}) {
      const double mu = effective_viscosity(m, c, j2);
      const double eta = eta_of_c(m, c);
      CHECK(std::abs(mu - eta) <= 1e-14 * eta);
    }
  }
}

TEST_CASE("hand value with yield stress") {
  ViscosityModel m;
  m.variant = ViscosityVariant::constant;
  m.eta_bar = 1.0;
  m.tau_y = 2.0;
  m.eps_j2 = 0.0;
  CHECK(effective_viscosity(m, 0.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("casson_k hand value") {
  ViscosityModel m;
  m.variant = ViscosityVariant::casson_k;
  m.k0 = 0.1937;
  m.k1 = 0.055;
  m.eps_j2 = 0.0;
  const double k = 0.1937 + 0.055;
  CHECK(effective_viscosity(m, 0.0, 1.0) == doctest::Approx(k * k).epsilon(1e-12));
  CHECK(effective_viscosity(m, 0.0, 1.0) == doctest::Approx(0.06185).epsilon(1e-3));
}

TEST_CASE("eta_of_c laws") {
  ViscosityModel lin;
  lin.variant = ViscosityVariant::linear_c;
  lin.eta0_p = 0.16;
  lin.K = 0.25;
  CHECK(eta_of_c(lin, 0.0) == doctest::Approx(0.16).epsilon(1e-15));
  CHECK(eta_of_c(lin, 4.0) == doctest::Approx(0.32).epsilon(1e-15));
  // clamp below when c is very negative
  CHECK(eta_of_c(lin, -100.0) == doctest::Approx(0.16e-6).epsilon(1e-12));
  CHECK(eta_of_c_derivative(lin, -100.0) == 0.0);
  CHECK(eta_of_c_derivative(lin, 1.0) == doctest::Approx(0.16 * 0.25).epsilon(1e-14));

  ViscosityModel ex;
  ex.variant = ViscosityVariant::exp_c;
  ex.A = 0.129;
  ex.B = 0.101;
  CHECK(eta_of_c(ex, 0.0) == doctest::Approx(0.129).epsilon(1e-15));
  CHECK(eta_of_c(ex, 2.0) == doctest::Approx(0.129 * std::exp(0.202)).epsilon(1e-14));
  CHECK(eta_of_c_derivative(ex, 2.0) ==
        doctest::Approx(0.101 * 0.129 * std::exp(0.202)).epsilon(1e-14));
}

TEST_CASE("shear thinning: mu decreasing in J2 when tau_y > 0") {
  ViscosityModel m;
  m.variant = ViscosityVariant::constant;
  m.eta_bar = 0.5;
  m.tau_y = 1.0;
  double prev = effective_viscosity(m, 0.0, 1e-4);
  for (double j2 = 1e-3; j2 < 1e3; j2 *= 3.0) {
    const double mu = effective_viscosity(m, 0.0, j2);
    CHECK(mu < prev);
    CHECK(mu > 0.0);
    prev = mu;
  }
}

TEST_CASE("non-finite input rejected") {
  ViscosityModel m;
  CHECK_THROWS(effective_viscosity(m, std::nan(""), 1.0));
  CHECK_THROWS(effective_viscosity(m, 0.0, std::numeric_limits<double>::infinity()));
}

TEST_CASE("viscosity partials match finite differences") {
  ViscosityModel m;
  m.variant = ViscosityVariant::exp_c;
  m.A = 0.129;
  m.B = 0.101;
  m.tau_y = 0.8;
  m.eps_j2 = 1e-10;
  const double c = 0.7, j2 = 0.9, d = 1e-6;
  const ViscosityPartials p = viscosity_partials(m, c, j2);
  CHECK(p.mu == doctest::Approx(effective_viscosity(m, c, j2)).epsilon(1e-14));
  const double fd_c =
      (effective_viscosity(m, c + d, j2) - effective_viscosity(m, c - d, j2)) / (2.0 * d);
  const double fd_j =
      (effective_viscosity(m, c, j2 + d) - effective_viscosity(m, c, j2 - d)) / (2.0 * d);
  CHECK(p.dmu_dc == doctest::Approx(fd_c).epsilon(1e-6));
  CHECK(p.dmu_dj2 == doctest::Approx(fd_j).epsilon(1e-6));
}

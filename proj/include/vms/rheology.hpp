#pragma once

#include <array>

namespace vms {

enum class ViscosityVariant { constant, casson_k, linear_c, exp_c };

struct ViscosityModel {
  ViscosityVariant variant = ViscosityVariant::constant;
  double eta_bar = 1.0;   // constant: eta(c) = eta_bar
  double k0 = 0.0;        // casson_k: mu = (k0 + k1*J2^(1/4))^2 / sqrt(J2)
  double k1 = 0.0;
  double eta0_p = 0.0;    // linear_c: eta(c) = eta0_p*(1 + K*c)
  double K = 0.0;
  double A = 0.0;         // exp_c: eta(c) = A*exp(B*c)
  double B = 0.0;
  double tau_y = 0.0;     // yield stress
  double eps_j2 = 1e-10;  // regularization floor added to J2
};

// Second invariant of the deformation rate:
// J2 = 2*(du1/dx)^2 + 2*(du2/dy)^2 + (du1/dy + du2/dx)^2.
// grad_u[i][j] = du_(i+1)/dx_(j+1).
double compute_j2(const std::array<std::array<double, 2>, 2>& grad_u);

// Concentration-dependent base viscosity eta(c). For linear_c the value is
// clamped below at eta0_p*1e-6; for casson_k it is the high-shear limit k1^2.
double eta_of_c(const ViscosityModel& model, double c);

// d(eta)/dc, zero wherever the linear_c clamp is active.
double eta_of_c_derivative(const ViscosityModel& model, double c);

// Regularized Casson effective viscosity
//   mu = (sqrt(tau_y/2) + sqrt(eta(c)) * J^(1/4))^2 * J^(-1/2),  J = J2 + eps_j2,
// evaluated as (a/J^(1/4) + b)^2 so the yield-free case returns eta(c) exactly.
double effective_viscosity(const ViscosityModel& model, double c, double j2);

struct ViscosityPartials {
  double mu;
  double dmu_dc;
  double dmu_dj2;
};

// mu together with its partial derivatives, used when building manufactured
// forcing terms analytically.
ViscosityPartials viscosity_partials(const ViscosityModel& model, double c, double j2);

}  // namespace vms

#include "vms/rheology.hpp"

#include <cmath>
#include <stdexcept>

namespace vms {

namespace {

struct CassonAB {
  double a;      // yield contribution, sqrt(tau_y/2) or k0
  double b;      // sqrt(eta(c)) or k1
  double db_dc;  // d(b)/dc
};

CassonAB casson_ab(const ViscosityModel& model, double c) {
  if (model.variant == ViscosityVariant::casson_k) {
    return {model.k0, model.k1, 0.0};
  }
  const double eta = eta_of_c(model, c);
  const double b = std::sqrt(eta);
  const double deta = eta_of_c_derivative(model, c);
  return {std::sqrt(0.5 * model.tau_y), b, b > 0.0 ? deta / (2.0 * b) : 0.0};
}

}  // namespace

double compute_j2(const std::array<std::array<double, 2>, 2>& grad_u) {
  const double d11 = grad_u[0][0];
  const double d22 = grad_u[1][1];
  const double off = grad_u[0][1] + grad_u[1][0];
  return 2.0 * d11 * d11 + 2.0 * d22 * d22 + off * off;
}

double eta_of_c(const ViscosityModel& model, double c) {
  switch (model.variant) {
    case ViscosityVariant::constant:
      return model.eta_bar;
    case ViscosityVariant::casson_k:
      return model.k1 * model.k1;
    case ViscosityVariant::linear_c:
      return std::max(model.eta0_p * (1.0 + model.K * c), model.eta0_p * 1e-6);
    case ViscosityVariant::exp_c:
      return model.A * std::exp(model.B * c);
  }
  throw std::logic_error("eta_of_c: unknown variant");
}

double eta_of_c_derivative(const ViscosityModel& model, double c) {
  switch (model.variant) {
    case ViscosityVariant::constant:
    case ViscosityVariant::casson_k:
      return 0.0;
    case ViscosityVariant::linear_c:
      return model.eta0_p * (1.0 + model.K * c) > model.eta0_p * 1e-6
                 ? model.eta0_p * model.K
                 : 0.0;
    case ViscosityVariant::exp_c:
      return model.A * model.B * std::exp(model.B * c);
  }
  throw std::logic_error("eta_of_c_derivative: unknown variant");
}

double effective_viscosity(const ViscosityModel& model, double c, double j2) {
  if (!std::isfinite(c) || !std::isfinite(j2)) {
    throw std::invalid_argument("effective_viscosity: non-finite input");
  }
  const CassonAB ab = casson_ab(model, c);
  const double s = std::pow(j2 + model.eps_j2, 0.25);
  const double r = ab.a / s + ab.b;
  return r * r;
}

ViscosityPartials viscosity_partials(const ViscosityModel& model, double c, double j2) {
  const CassonAB ab = casson_ab(model, c);
  const double jh = j2 + model.eps_j2;
  const double s = std::pow(jh, 0.25);
  const double r = ab.a / s + ab.b;
  ViscosityPartials out;
  out.mu = r * r;
  out.dmu_dc = 2.0 * r * ab.db_dc;
  out.dmu_dj2 = -0.5 * ab.a * r * std::pow(jh, -1.25);
  return out;
}

}  // namespace vms

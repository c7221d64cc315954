#include "vms/manufactured.hpp"

#include <cmath>
#include <stdexcept>

namespace vms {

namespace {

// P(x) = x^2 (x-1)^2 and derivatives
double P(double x) { return x * x * (x - 1.0) * (x - 1.0); }
double P1d(double x) { return 4.0 * x * x * x - 6.0 * x * x + 2.0 * x; }
double P2d(double x) { return 12.0 * x * x - 12.0 * x + 2.0; }
double P3d(double x) { return 24.0 * x - 12.0; }

// R(x) = x (x-1)
double R(double x) { return x * (x - 1.0); }
double R1d(double x) { return 2.0 * x - 1.0; }

}  // namespace

// u1 = e^-t P(x) P'(y)/2
ExactValue ManufacturedSolution::u1(double x, double y, double t) const {
  const double e = std::exp(-t);
  ExactValue v;
  v.v = e * P(x) * 0.5 * P1d(y);
  v.dt = -v.v;
  v.grad = {e * P1d(x) * 0.5 * P1d(y), e * P(x) * 0.5 * P2d(y)};
  v.hess = {e * P2d(x) * 0.5 * P1d(y), e * P1d(x) * 0.5 * P2d(y), e * P(x) * 0.5 * P3d(y)};
  return v;
}

// u2 = -e^-t P'(x)/2 P(y)
ExactValue ManufacturedSolution::u2(double x, double y, double t) const {
  const double e = std::exp(-t);
  ExactValue v;
  v.v = -e * 0.5 * P1d(x) * P(y);
  v.dt = -v.v;
  v.grad = {-e * 0.5 * P2d(x) * P(y), -e * 0.5 * P1d(x) * P1d(y)};
  v.hess = {-e * 0.5 * P3d(x) * P(y), -e * 0.5 * P2d(x) * P1d(y), -e * 0.5 * P1d(x) * P2d(y)};
  return v;
}

ExactValue ManufacturedSolution::p(double x, double y, double t) const {
  const double e = std::exp(-t);
  ExactValue v;
  v.v = e * (3.0 * x * x + 3.0 * y * y - 2.0);
  v.dt = -v.v;
  v.grad = {e * 6.0 * x, e * 6.0 * y};
  v.hess = {e * 6.0, 0.0, e * 6.0};
  return v;
}

ExactValue ManufacturedSolution::c(double x, double y, double t) const {
  const double e = std::exp(-t);
  ExactValue v;
  v.v = e * R(x) * R(y);
  v.dt = -v.v;
  v.grad = {e * R1d(x) * R(y), e * R(x) * R1d(y)};
  v.hess = {e * 2.0 * R(y), e * R1d(x) * R1d(y), e * 2.0 * R(x)};
  return v;
}

std::array<double, 2> manufactured_forcing_momentum(const ManufacturedSolution& sol,
                                                    const CoefficientSet& coeffs, double x,
                                                    double y, double t) {
  const ExactValue a = sol.u1(x, y, t);
  const ExactValue b = sol.u2(x, y, t);
  const ExactValue pr = sol.p(x, y, t);
  const ExactValue cc = sol.c(x, y, t);
  const double rho = coeffs.rho;

  const double j2 = compute_j2({{{a.grad[0], a.grad[1]}, {b.grad[0], b.grad[1]}}});
  const ViscosityPartials mu = viscosity_partials(coeffs.viscosity, cc.v, j2);

  const double off = a.grad[1] + b.grad[0];
  // J2 = 2 u1x^2 + 2 u2y^2 + (u1y + u2x)^2, differentiated in x and y
  const double j2x = 4.0 * a.grad[0] * a.hess[0] + 4.0 * b.grad[1] * b.hess[1] +
                     2.0 * off * (a.hess[1] + b.hess[0]);
  const double j2y = 4.0 * a.grad[0] * a.hess[1] + 4.0 * b.grad[1] * b.hess[2] +
                     2.0 * off * (a.hess[2] + b.hess[1]);
  const double mux = mu.dmu_dc * cc.grad[0] + mu.dmu_dj2 * j2x;
  const double muy = mu.dmu_dc * cc.grad[1] + mu.dmu_dj2 * j2y;

  // div(2 mu D(u)), written out componentwise
  const double visc1 = 2.0 * mu.mu * a.hess[0] + 2.0 * mux * a.grad[0] +
                       mu.mu * (a.hess[2] + b.hess[1]) + muy * off;
  const double visc2 = mux * off + mu.mu * (a.hess[1] + b.hess[0]) +
                       2.0 * muy * b.grad[1] + 2.0 * mu.mu * b.hess[2];

  const double f1 = rho * a.dt + rho * (a.v * a.grad[0] + b.v * a.grad[1]) + pr.grad[0] - visc1;
  const double f2 = rho * b.dt + rho * (a.v * b.grad[0] + b.v * b.grad[1]) + pr.grad[1] - visc2;
  return {f1, f2};
}

double manufactured_forcing_transport(const ManufacturedSolution& sol,
                                      const CoefficientSet& coeffs, double x, double y,
                                      double t) {
  const ExactValue a = sol.u1(x, y, t);
  const ExactValue b = sol.u2(x, y, t);
  const ExactValue cc = sol.c(x, y, t);
  const double diff = coeffs.D1(x, y, t) * cc.hess[0] + coeffs.dD1_dx(x, y, t) * cc.grad[0] +
                      coeffs.D2(x, y, t) * cc.hess[2] + coeffs.dD2_dy(x, y, t) * cc.grad[1];
  return cc.dt - diff + a.v * cc.grad[0] + b.v * cc.grad[1] + coeffs.alpha * cc.v;
}

void attach_manufactured_forcing(ManufacturedCase& mc) {
  const ManufacturedSolution sol = mc.exact;
  const CoefficientSet base = mc.coeffs;  // copy without forcing
  mc.coeffs.fF1 = [sol, base](double x, double y, double t) {
    return manufactured_forcing_momentum(sol, base, x, y, t)[0];
  };
  mc.coeffs.fF2 = [sol, base](double x, double y, double t) {
    return manufactured_forcing_momentum(sol, base, x, y, t)[1];
  };
  mc.coeffs.fT = [sol, base](double x, double y, double t) {
    return manufactured_forcing_transport(sol, base, x, y, t);
  };
}

void set_variable_diffusion(CoefficientSet& c) {
  // D1 = e^-t y^2(y-1)^2(2y-1)^2 x^4(x-1)^4 = e^-t (P'(y)/2)^2 P(x)^2, and the
  // x<->y mirrored D2
  c.D1 = [](double x, double y, double t) {
    const double g = 0.5 * P1d(y);
    return std::exp(-t) * g * g * P(x) * P(x);
  };
  c.dD1_dx = [](double x, double y, double t) {
    const double g = 0.5 * P1d(y);
    return std::exp(-t) * g * g * 2.0 * P(x) * P1d(x);
  };
  c.D2 = [](double x, double y, double t) {
    const double g = 0.5 * P1d(x);
    return std::exp(-t) * g * g * P(y) * P(y);
  };
  c.dD2_dy = [](double x, double y, double t) {
    const double g = 0.5 * P1d(x);
    return std::exp(-t) * g * g * 2.0 * P(y) * P1d(y);
  };
}

ManufacturedCase make_scenario(ScenarioTag tag, double re) {
  ManufacturedCase mc;
  mc.tag = tag;
  mc.coeffs.rho = 1.0;
  mc.coeffs.alpha = 0.01;
  mc.coeffs.D1 = constant_field(0.01);
  mc.coeffs.D2 = constant_field(0.01);
  mc.coeffs.dD1_dx = zero_field();
  mc.coeffs.dD2_dy = zero_field();

  switch (tag) {
    case ScenarioTag::weak_const:
      mc.name = "weak_const_re" + std::to_string(static_cast<long>(re));
      mc.coeffs.viscosity.variant = ViscosityVariant::constant;
      mc.coeffs.viscosity.eta_bar = 1.0 / re;
      mc.coeffs.viscosity.tau_y = 0.0;
      break;
    case ScenarioTag::weak_casson_k:
      mc.name = "weak_casson_k";
      mc.coeffs.viscosity.variant = ViscosityVariant::casson_k;
      mc.coeffs.viscosity.k0 = 0.1937;
      mc.coeffs.viscosity.k1 = 0.055;
      break;
    case ScenarioTag::strong_linear_c:
      mc.name = "strong_linear_c";
      mc.coeffs.viscosity.variant = ViscosityVariant::linear_c;
      mc.coeffs.viscosity.eta0_p = 0.16;
      mc.coeffs.viscosity.K = 0.25;
      mc.coeffs.viscosity.tau_y = 0.0;
      set_variable_diffusion(mc.coeffs);
      break;
    case ScenarioTag::strong_exp_c:
      mc.name = "strong_exp_c";
      mc.coeffs.viscosity.variant = ViscosityVariant::exp_c;
      mc.coeffs.viscosity.A = 0.129;
      mc.coeffs.viscosity.B = 0.101;
      mc.coeffs.viscosity.tau_y = 0.0;
      set_variable_diffusion(mc.coeffs);
      break;
  }
  attach_manufactured_forcing(mc);
  return mc;
}

ScenarioTag scenario_from_name(const std::string& name) {
  if (name == "weak_const") return ScenarioTag::weak_const;
  if (name == "weak_casson_k") return ScenarioTag::weak_casson_k;
  if (name == "strong_linear_c") return ScenarioTag::strong_linear_c;
  if (name == "strong_exp_c") return ScenarioTag::strong_exp_c;
  throw std::invalid_argument("unknown scenario: " + name);
}

std::string scenario_name(ScenarioTag tag) {
  switch (tag) {
    case ScenarioTag::weak_const: return "weak_const";
    case ScenarioTag::weak_casson_k: return "weak_casson_k";
    case ScenarioTag::strong_linear_c: return "strong_linear_c";
    case ScenarioTag::strong_exp_c: return "strong_exp_c";
  }
  return "?";
}

}  // namespace vms

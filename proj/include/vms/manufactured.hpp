#pragma once

#include <string>

#include "vms/coefficients.hpp"

namespace vms {

// Value and derivatives of one closed-form space-time field.
struct ExactValue {
  double v = 0.0;
  double dt = 0.0;
  std::array<double, 2> grad = {0.0, 0.0};
  std::array<double, 3> hess = {0.0, 0.0, 0.0};  // xx, xy, yy
};

// The common exact solution of the convergence experiments:
//   u  = (e^-t x^2(x-1)^2 y(y-1)(2y-1), -e^-t x(x-1)(2x-1) y^2(y-1)^2)
//   p  = e^-t (3x^2 + 3y^2 - 2)
//   c  = e^-t x y (x-1)(y-1)
// u is divergence-free, p has zero mean, and u, c vanish on the boundary.
struct ManufacturedSolution {
  ExactValue u1(double x, double y, double t) const;
  ExactValue u2(double x, double y, double t) const;
  ExactValue p(double x, double y, double t) const;
  ExactValue c(double x, double y, double t) const;
};

enum class ScenarioTag { weak_const, weak_casson_k, strong_linear_c, strong_exp_c };

struct ManufacturedCase {
  std::string name;
  ScenarioTag tag = ScenarioTag::weak_const;
  ManufacturedSolution exact;
  CoefficientSet coeffs;  // forcing derived from the exact solution
};

// Analytic body force and solute source obtained by substituting the exact
// solution into the strong momentum and transport operators.
std::array<double, 2> manufactured_forcing_momentum(const ManufacturedSolution& sol,
                                                    const CoefficientSet& coeffs, double x,
                                                    double y, double t);
double manufactured_forcing_transport(const ManufacturedSolution& sol,
                                      const CoefficientSet& coeffs, double x, double y, double t);

// Install the variable diffusion pair
//   D1 = e^-t y^2(y-1)^2(2y-1)^2 x^4(x-1)^4,  D2 mirrored in x<->y,
// together with their analytic partials.
void set_variable_diffusion(CoefficientSet& coeffs);

// Replace the forcing closures of mc.coeffs by the analytic manufactured
// forcing built from mc.exact and the remaining coefficients.
void attach_manufactured_forcing(ManufacturedCase& mc);

// Scenario registry for the convergence experiments. `re` is used only by
// weak_const (constant viscosity eta = 1/Re with rho = U = L = 1).
ManufacturedCase make_scenario(ScenarioTag tag, double re = 100.0);

ScenarioTag scenario_from_name(const std::string& name);
std::string scenario_name(ScenarioTag tag);

}  // namespace vms

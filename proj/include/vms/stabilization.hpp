#pragma once

#include <vector>

#include "vms/coefficients.hpp"
#include "vms/fe_core.hpp"
#include "vms/mesh.hpp"

namespace vms {

// Algorithmic constants of the stabilization parameters.
struct StabConstants {
  double c1 = 4.0;
  double c2 = 2.0;
  double c3 = 1.0;
};

struct TauSet {
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau3 = 0.0;
};

struct TauBarSet {
  double tau_bar1 = 0.0;
  double tau_bar2 = 0.0;
  double tau_bar3 = 0.0;
};

// tau1 = (c1*eta0/h^2 + c2*rho*|u|/h)^-1
// tau2 = h^2/(c1*tau1)
// tau3 = c3*(9*Dm/(4h^2) + 3|u|/(2h) + alpha)^-1
TauSet compute_tau(double h, double speed, double eta0, double rho, double d_m, double alpha,
                   const StabConstants& consts);

// tau_bar = (M/dt + tau^-1)^-1 per component; the pressure entry of M is zero
// so tau_bar2 = tau2.
TauBarSet compute_tau_bar(const TauSet& tau, double rho, double dt);

// Per-element stabilization data for one time step, frozen at t^n fields.
struct ElemStab {
  TauSet tau;
  TauBarSet tau_bar;
  double eta0 = 0.0;   // 2*mu at the element centroid, previous level
  double speed = 0.0;  // |u_h| at the element centroid, previous level
  double d_m = 0.0;    // max(|D1|,|D2|) at the centroid, t^{n+1}
};

std::vector<ElemStab> compute_element_stabilization(const Mesh& mesh, const FieldState& state_prev,
                                                    const CoefficientSet& coeffs,
                                                    const StabConstants& consts, double dt,
                                                    double t_new);

// Strong residual of the semi-implicit scheme at one quadrature point.
// Second-derivative viscous/diffusive terms vanish for P1; the first-order
// variable-diffusion part of the transport operator is retained.
struct ResidualSample {
  std::array<double, 2> r1 = {0.0, 0.0};  // momentum
  double r2 = 0.0;                        // -div u
  double r3 = 0.0;                        // transport
};

ResidualSample strong_residual(const Mesh& mesh, const FieldState& state_prev,
                               const FieldState& state_new, const CoefficientSet& coeffs,
                               double dt, int k, const std::array<double, 3>& bary);

// Dynamic subgrid-scale values tracked per element and quadrature point.
struct SubscaleField {
  int n_el = 0;
  int n_qp = 0;
  std::vector<std::array<double, 2>> u;
  std::vector<double> p;
  std::vector<double> c;

  static SubscaleField zeros(int n_el, int n_qp);
  int idx(int k, int q) const { return k * n_qp + q; }
};

// Scalar update rule, exposed for the fixed-point tests:
// new = tau_bar * (residual + (m/dt) * old), with m = rho for velocity and
// m = 1 for concentration; the pressure subscale is tau2 * r2 with no history.
double advance_subscale_scalar(double old_value, double residual, double tau_bar, double m,
                               double dt);

// Advance all subscales using the residual of the newly computed state.
void advance_subscales(const Mesh& mesh, SubscaleField& subs, const FieldState& state_prev,
                       const FieldState& state_new, const CoefficientSet& coeffs,
                       const std::vector<ElemStab>& stab, double dt);

}  // namespace vms

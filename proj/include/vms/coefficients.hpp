#pragma once

#include <functional>

#include "vms/rheology.hpp"

namespace vms {

// Space-time scalar coefficient, evaluated at (x, y, t).
using ScalarField = std::function<double(double, double, double)>;

ScalarField constant_field(double value);
ScalarField zero_field();

// Physical data of one run: density, reaction, diffusion, forcing, Dirichlet
// boundary data and the viscosity model. The analytic partials dD1_dx and
// dD2_dy feed the first-order part of the transport residual and its adjoint.
struct CoefficientSet {
  double rho = 1.0;
  double alpha = 0.0;
  ScalarField D1 = constant_field(0.0);
  ScalarField D2 = constant_field(0.0);
  ScalarField dD1_dx = zero_field();
  ScalarField dD2_dy = zero_field();
  ScalarField fF1 = zero_field();
  ScalarField fF2 = zero_field();
  ScalarField fT = zero_field();
  ScalarField bc_u1 = zero_field();
  ScalarField bc_u2 = zero_field();
  ScalarField bc_c = zero_field();
  ViscosityModel viscosity;
};

}  // namespace vms

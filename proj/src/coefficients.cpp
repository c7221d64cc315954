#include "vms/coefficients.hpp"

namespace vms {

ScalarField constant_field(double value) {
  return [value](double, double, double) { return value; };
}

ScalarField zero_field() {
  return [](double, double, double) { return 0.0; };
}

}  // namespace vms

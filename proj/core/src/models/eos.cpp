#include "aeplab/models/eos.hpp"

#include <cmath>

namespace aeplab::models {

double IdealGasEos::e(double rho, double s) const {
  return c1 * std::pow(rho, gamma_exp - 1.0) * std::exp(s / cv);
}

double IdealGasEos::e_rho(double rho, double s) const {
  return c1 * (gamma_exp - 1.0) * std::pow(rho, gamma_exp - 2.0) *
         std::exp(s / cv);
}

double IdealGasEos::e_s(double rho, double s) const {
  return e(rho, s) / cv;
}

double IdealGasEos::pressure(double rho, double s) const {
  return rho * rho * e_rho(rho, s);
}

} // namespace aeplab::models

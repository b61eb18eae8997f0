#pragma once

namespace aeplab::models {

/// Ideal-gas internal energy per unit mass,
///   e(rho, s) = c1 rho^(gamma_exp - 1) exp(s / cv),
/// smooth and positive for rho > 0. pressure = rho^2 de/drho.
struct IdealGasEos {
  double c1 = 1.0;
  double gamma_exp = 1.4;
  double cv = 1.0;

  double e(double rho, double s) const;
  double e_rho(double rho, double s) const;
  double e_s(double rho, double s) const;
  double pressure(double rho, double s) const;
  double temperature(double rho, double s) const { return e_s(rho, s); }
};

} // namespace aeplab::models

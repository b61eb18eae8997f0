#pragma once

#include <memory>

#include "aeplab/models/model.hpp"

namespace aeplab::models {

/// Reduced Lagrangians for the spin block (no fluid part):
///   quadratic      l = eps/2 Int |nu|^2 - rigidity/2 Int |gamma|^2
///   perpendicular  l = 1/2 Int sum_i |[nu, gamma_i]|^2
///   parallel       l = 1/2 Int sum_i pair(nu, gamma_i)^2
/// Only the quadratic choice has an invertible inertia operator everywhere,
/// so only it integrates in time; the other two ship as evaluators whose
/// structural identities are checked at generic states.
enum class SpinLagrangian { quadratic, perpendicular, parallel };

struct SpinLagrangianDerivatives {
  Field dl_dnu;    // algebra-valued
  Field dl_dgamma; // algebra-valued one-form
  double value = 0.0;
};

SpinLagrangianDerivatives spin_lagrangian(const reduction::ReductionOps& red,
                                          SpinLagrangian which,
                                          const Field& nu, const Field& gamma,
                                          double susceptibility,
                                          double rigidity);

/// Spin dynamics over a fixed spatial domain: state (kappa, gamma), kappa
/// the spin momentum density, gamma the connection it precesses against.
/// Integration uses the Hamiltonian form of the quadratic Lagrangian:
///   dkappa/dt = -ad*_nu kappa - div^gamma(rigidity gamma),
///   dgamma/dt = -d^gamma nu,        nu = kappa / susceptibility.
/// Throws on construction for nonpositive constants.
std::unique_ptr<Model> make_spin_system(
    const fields::Grid& grid, fields::Scheme scheme, algebra::LieAlgebra alg,
    double susceptibility, double rigidity,
    SpinLagrangian choice = SpinLagrangian::quadratic);

} // namespace aeplab::models

#pragma once

#include <memory>

#include "aeplab/models/eos.hpp"
#include "aeplab/models/model.hpp"

namespace aeplab::models {

/// Compressible flow in momentum form: blocks m (momentum density
/// one-form), rho (mass density), s (specific entropy). Velocity u = m/rho;
/// the pressure force enters through the density and entropy diamonds.
std::unique_ptr<Model> make_ideal_fluid(const fields::Grid& grid,
                                        fields::Scheme scheme,
                                        IdealGasEos eos = {});

/// Conducting flow carrying a charge density and a connection-valued
/// magnetic potential: blocks m, Q, rho, s, A. The commutative fiber (u1)
/// gives classical magnetohydrodynamics; a noncommutative fiber gives the
/// gauge-charged extension. The magnetic two-form is the curvature of A and
/// the Lorentz force is the connection diamond of dh/dA.
std::unique_ptr<Model> make_mhd(const fields::Grid& grid,
                                fields::Scheme scheme, IdealGasEos eos,
                                algebra::LieAlgebra alg);

} // namespace aeplab::models

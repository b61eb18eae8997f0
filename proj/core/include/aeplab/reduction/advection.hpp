#pragma once

#include <string_view>

#include "aeplab/reduction/reduction_ops.hpp"

namespace aeplab::reduction {

/// Transport law attached to one advected state block. Each tag maps to one
/// discrete tangent formula; the fiber-velocity argument is ignored by laws
/// that carry no internal rotation.
enum class AdvectionLaw {
  density,              // adot + div(a u) = 0
  scalar,               // sdot + ds(u) = 0
  symTensorConjugation, // idot + di(u) + nu^T i + i nu = 0
  connectionAffine,     // gammadot + Lie_u gamma + d^gamma nu = 0
  directorLinear,       // ndot + (grad n) u + n x nu = 0
  velocityOneFormAffine // vdot + Lie_u v + d(nu) = 0, scalar nu
};

std::string_view to_string(AdvectionLaw law);
AdvectionLaw advection_law_from_string(std::string_view s);

/// Number of components the law's field carries on grid g for algebra G.
int advected_ncomp(AdvectionLaw law, const fields::Grid& g, int algebra_dim);

/// Time derivative of the advected field under (u, nu). Either velocity may
/// be null (absent in the model), in which case its transport term drops.
/// For symTensorConjugation, nu may be given in algebra coordinates; it is
/// pushed through the algebra's matrix representation.
fields::Field advection_tangent(const ReductionOps& red, AdvectionLaw law,
                                const fields::Field& f,
                                const fields::Field* u,
                                const fields::Field* nu);

} // namespace aeplab::reduction

#include "aeplab/reduction/advection.hpp"

#include <stdexcept>

namespace aeplab::reduction {

using fields::Field;

std::string_view to_string(AdvectionLaw law) {
  switch (law) {
  case AdvectionLaw::density: return "density";
  case AdvectionLaw::scalar: return "scalar";
  case AdvectionLaw::symTensorConjugation: return "symTensorConjugation";
  case AdvectionLaw::connectionAffine: return "connectionAffine";
  case AdvectionLaw::directorLinear: return "directorLinear";
  case AdvectionLaw::velocityOneFormAffine: return "velocityOneFormAffine";
  }
  return "?";
}

AdvectionLaw advection_law_from_string(std::string_view s) {
  if (s == "density") return AdvectionLaw::density;
  if (s == "scalar") return AdvectionLaw::scalar;
  if (s == "symTensorConjugation") return AdvectionLaw::symTensorConjugation;
  if (s == "connectionAffine") return AdvectionLaw::connectionAffine;
  if (s == "directorLinear") return AdvectionLaw::directorLinear;
  if (s == "velocityOneFormAffine") return AdvectionLaw::velocityOneFormAffine;
  throw std::invalid_argument("unknown advection law: " + std::string(s));
}

int advected_ncomp(AdvectionLaw law, const fields::Grid& g, int algebra_dim) {
  switch (law) {
  case AdvectionLaw::density:
  case AdvectionLaw::scalar: return 1;
  case AdvectionLaw::symTensorConjugation: return 9;
  case AdvectionLaw::connectionAffine: return algebra_dim * g.dim;
  case AdvectionLaw::directorLinear: return 3;
  case AdvectionLaw::velocityOneFormAffine: return g.dim;
  }
  return 0;
}

namespace {

/// Expand algebra coordinates into the 3x3 matrix realisation per node.
Field to_matrix_field(const algebra::LieAlgebra& alg, const Field& nu) {
  Field out(nu.grid(), 9);
  const int gdim = alg.dim;
  for (std::size_t node = 0; node < nu.grid().nodes; ++node) {
    for (int a = 0; a < gdim; ++a) {
      const double c = nu(node, a);
      const Eigen::MatrixXd& e = alg.rep[static_cast<std::size_t>(a)];
      for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) out(node, 3 * r + k) += c * e(r, k);
    }
  }
  return out;
}

} // namespace

Field advection_tangent(const ReductionOps& red, AdvectionLaw law,
                        const Field& f, const Field* u, const Field* nu) {
  Field out(f.grid(), f.ncomp());
  switch (law) {
  case AdvectionLaw::density:
    if (u) out -= red.transport_divergence(*u, f);
    break;
  case AdvectionLaw::scalar:
    if (u) out -= red.directional(*u, f);
    break;
  case AdvectionLaw::symTensorConjugation: {
    if (!nu) {
      if (u) out -= red.directional(*u, f);
      break;
    }
    Field zero_u(f.grid(), f.grid().dim);
    const Field nu9 =
        nu->ncomp() == 9 ? *nu : to_matrix_field(red.alg(), *nu);
    out -= red.advect_matrix(u ? *u : zero_u, nu9, f);
    break;
  }
  case AdvectionLaw::connectionAffine:
    if (u) out -= red.lie_connection(*u, f);
    if (nu) out -= red.covariant_differential(*nu, f);
    break;
  case AdvectionLaw::directorLinear: {
    if (!nu) {
      if (u) out -= red.directional(*u, f);
      break;
    }
    Field zero_u(f.grid(), f.grid().dim);
    out -= red.advect_director(u ? *u : zero_u, *nu, f);
    break;
  }
  case AdvectionLaw::velocityOneFormAffine:
    if (u) out -= red.lie_oneform(*u, f);
    if (nu) out -= red.spatial().grad(*nu);
    break;
  }
  return out;
}

} // namespace aeplab::reduction

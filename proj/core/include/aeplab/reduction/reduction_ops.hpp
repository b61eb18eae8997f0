#pragma once

#include "aeplab/algebra/lie_algebra.hpp"
#include "aeplab/fields/field.hpp"
#include "aeplab/fields/spatial_ops.hpp"

namespace aeplab::reduction {

using fields::Field;

/// Calculus coupling a Lie algebra fiber to the spatial grid. Component
/// layouts, with G the algebra dimension, d the grid dimension, and
/// P = d(d-1)/2 the number of antisymmetric index pairs:
///   algebra-valued function    G    comps, index a
///   algebra-valued one-form    G*d  comps, index a*d + i
///   algebra-valued two-form    G*P  comps, index a*P + p, pairs (i<j)
///   velocity / one-form        d
/// Duals are stored in the same layouts; the algebra's pairing identifies
/// them. Every diamond below is the discrete adjoint of the matching
/// advection operator under the box L2 pairing, which the adjointness tests
/// check term by term.
class ReductionOps {
public:
  ReductionOps(const algebra::LieAlgebra& alg, const fields::SpatialOps& ops);

  const algebra::LieAlgebra& alg() const { return *alg_; }
  const fields::SpatialOps& spatial() const { return *ops_; }
  const fields::Grid& grid() const { return ops_->grid(); }
  int gdim() const { return alg_->dim; }

  // pointwise fiber operations
  Field bracket(const Field& a, const Field& b) const;
  Field ad_star(const Field& xi, const Field& mu) const;
  Field pair(const Field& w, const Field& a) const;            // -> 1 comp
  Field pair_oneform(const Field& w, const Field& g) const;    // -> 1 comp
  /// sum over pairs p of pair(b_p, c_p); the two-form norm convention used
  /// by the magnetic and curvature functionals.
  Field pair_twoform(const Field& b, const Field& c) const;    // -> 1 comp
  /// [nu, gamma_i] per axis (or per pair when both carry P slots).
  Field ad_connection(const Field& nu, const Field& gamma) const;
  Field ad_twoform(const Field& nu, const Field& B) const;

  // connection calculus
  /// (d^gamma nu)_i = d_i nu + [gamma_i, nu].
  Field covariant_differential(const Field& nu, const Field& gamma) const;
  /// (div^gamma w) = sum_k (d_k w^k - ad*_{gamma_k} w^k).
  Field covariant_divergence(const Field& w, const Field& gamma) const;
  /// B_ij = d_i gamma_j - d_j gamma_i + [gamma_i, gamma_j], i < j.
  Field curvature(const Field& gamma) const;
  /// (d^gamma w)_ij = d_i w_j - d_j w_i + [w_i, gamma_j] + [gamma_i, w_j],
  /// the linearization of curvature at gamma; minus the adjoint of
  /// divergence_twoform. Empty gamma gives the plain exterior derivative.
  Field covariant_exterior_oneform(const Field& w, const Field& gamma) const;
  /// gamma(u) = sum_i u^i gamma_i.
  Field gamma_of(const Field& u, const Field& gamma) const;
  /// (i_v B)_j = sum_k v^k B_kj.
  Field interior_twoform(const Field& v, const Field& B) const;
  /// (div^gamma b)^l = sum_k (d_k b^kl - ad*_{gamma_k} b^kl); pass an empty
  /// gamma for the plain divergence.
  Field divergence_twoform(const Field& b, const Field& gamma) const;
  Field divergence_twoform(const Field& b) const;

  // transport
  /// (Lie_u m)_i = u^j d_j m_i + m_j d_i u^j.
  Field lie_oneform(const Field& u, const Field& m) const;
  Field lie_connection(const Field& u, const Field& gamma) const;
  /// (Lie_u B)_kl = u^j d_j B_kl + B_jl d_k u^j + B_kj d_l u^j.
  Field lie_twoform(const Field& u, const Field& B) const;
  /// Lie_u m + (div u) m: transport of a momentum density one-form.
  Field momentum_advection(const Field& u, const Field& m) const;
  /// sum_k d_k (u^k f_c) for every component c of f.
  Field transport_divergence(const Field& u, const Field& f) const;
  /// (u . grad) f for every component.
  Field directional(const Field& u, const Field& f) const;
  /// (kappa . d nu)_j = pair(kappa, d_j nu).
  Field kappa_d(const Field& kappa, const Field& nu) const;

  // diamonds: dual-side force terms
  Field diamond_density(const Field& v, const Field& rho) const;     // -> d
  Field diamond_scalar(const Field& v, const Field& s) const;        // -> d
  Field diamond1_connection(const Field& w, const Field& gamma) const; // -> d
  Field diamond2_connection(const Field& w, const Field& gamma) const; // -> G
  Field diamond1_twoform(const Field& b, const Field& B) const;      // -> d
  Field diamond2_twoform(const Field& b, const Field& B) const;      // -> G
  Field diamond1_matrix(const Field& m, const Field& i) const;       // -> d
  /// -(i m^T + i^T m), the gl3 dual of nu -> nu^T i + i nu.
  Field diamond2_matrix(const Field& m, const Field& i) const;       // -> 9
  Field diamond1_director(const Field& m, const Field& n) const;     // -> d
  Field diamond2_director(const Field& m, const Field& n) const;     // -> 3

  // matrix / director transport (fibers fixed to gl3 / so3 as 3-vectors)
  /// (u . grad) i + nu^T i + i nu (nu a gl3 matrix field).
  Field advect_matrix(const Field& u, const Field& nu, const Field& i) const;
  /// (grad n) u + n x nu (nu an so3 3-vector field).
  Field advect_director(const Field& u, const Field& nu, const Field& n) const;

  /// Signed lookup of a two-form component for arbitrary axes (a, b).
  static double twoform_entry(const fields::Grid& g, const Field& B,
                              std::size_t node, int alg_comp, int a, int b,
                              int pairs);

private:
  const algebra::LieAlgebra* alg_;
  const fields::SpatialOps* ops_;
};

} // namespace aeplab::reduction

#pragma once

#include <Eigen/Dense>

namespace aeplab::algebra {

/// Data defining the metric Lie algebras so(K) = {x : x^T K + K x = 0} and
/// their conformal extensions cso(K) = so(K) + R I.
///
/// K is symmetric and invertible but need not be definite. The intertwining
/// map L identifies R^3 with so(K) through hat_K(u) = K^{-1} (L u)^, where
/// (.)^ is the usual skew hat map. The derived matrix D = det(L) L^-1 K^-1 L^-1
/// realises the induced vector-coordinate bracket cross_K(u, v) = D (u x v)
/// and the coadjoint action ad*_u w = (D w) x u. With the default choice
/// L = det(K) K^-1 one gets D = K.
struct KMetric {
  Eigen::Matrix3d K = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d L = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d D = Eigen::Matrix3d::Identity();
  int positive_eigenvalues = 3;
  bool definite = true;

  /// K = L = I; reduces to the round so(3).
  static KMetric standard();

  /// Default intertwiner L = det(K) K^{-1}.
  static KMetric from_k(const Eigen::Matrix3d& k);

  static KMetric from_kl(const Eigen::Matrix3d& k, const Eigen::Matrix3d& l);

  /// The Ad-invariant metric (1/det L) L K L on vector coordinates.
  /// The canonical dot product used for dual identification is invariant
  /// only for K proportional to the identity; this one always is.
  Eigen::Matrix3d invariant_metric() const;
};

/// Skew hat map, hat(u) v = u x v.
Eigen::Matrix3d hat(const Eigen::Vector3d& u);

/// Inverse of hat on skew matrices.
Eigen::Vector3d unhat(const Eigen::Matrix3d& s);

/// hat_K(u) = K^{-1} (L u)^ in so(K).
Eigen::Matrix3d hat_k(const Eigen::Vector3d& u, const KMetric& km);

/// cross_K(u, v) = D (u x v); satisfies hat_K(cross_K(u,v)) = [hat_K u, hat_K v].
Eigen::Vector3d cross_k(const Eigen::Vector3d& u, const Eigen::Vector3d& v,
                        const KMetric& km);

/// Quadratic Casimir C(w) = 1/2 w^T D w of the vector-coordinate coadjoint
/// action; its gradient D w satisfies ad*_{D w} w = 0.
double casimir_k(const Eigen::Vector3d& w, const KMetric& km);

/// Gradient of casimir_k.
Eigen::Vector3d casimir_k_gradient(const Eigen::Vector3d& w, const KMetric& km);

} // namespace aeplab::algebra

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aeplab/algebra/kmetric.hpp"

namespace aeplab::algebra {

enum class AlgebraId { so3, cso3, soK, csoK, gl3, u1, quat, pure_quat };

const char* to_string(AlgebraId id);
std::optional<AlgebraId> algebra_id_from_string(const std::string& s);

/// Finite-dimensional Lie algebra descriptor.
///
/// Elements and duals are coordinate vectors of length dim. The dual is
/// identified with the algebra through the symmetric pairing matrix:
/// pair(w, a) = w^T pairing a. All coadjoint formulas below are relative to
/// that identification, so ad_star(xi, mu) is defined by
///   pair(ad_star(xi, mu), eta) = pair(mu, bracket(xi, eta)).
///
/// pairing_ad_invariant records whether the pairing itself satisfies
/// pair([a,b], c) + pair(b, [a,c]) = 0. When it does not (soK/csoK with
/// anisotropic K, gl3), invariant_metric holds a metric that does; for soK
/// that is (1/det L) L K L.
class LieAlgebra {
public:
  AlgebraId id;
  int dim = 0;
  std::vector<std::string> basis;
  Eigen::MatrixXd pairing;
  Eigen::MatrixXd pairing_inv;
  bool pairing_ad_invariant = false;
  Eigen::MatrixXd invariant_metric;
  /// Matrix realisation of the basis (empty for u1). Used by the
  /// reconstruction oracles and by subalgebra projections.
  std::vector<Eigen::MatrixXd> rep;
  std::optional<KMetric> km;

  /// Structure constant C^c_{ab} of [e_a, e_b] = C^c_{ab} e_c.
  double c(int cc, int a, int b) const {
    return structure_[(static_cast<std::size_t>(cc) * dim + a) * dim + b];
  }

  // span kernels, no allocation; out must not alias the inputs
  void bracket_span(const double* a, const double* b, double* out) const;
  void ad_star_span(const double* xi, const double* mu, double* out) const;
  double pair_span(const double* w, const double* a) const;

  Eigen::VectorXd bracket(const Eigen::VectorXd& a,
                          const Eigen::VectorXd& b) const;
  Eigen::VectorXd ad_star(const Eigen::VectorXd& xi,
                          const Eigen::VectorXd& mu) const;
  double pair(const Eigen::VectorXd& w, const Eigen::VectorXd& a) const;

  bool has_rep() const { return !rep.empty(); }
  Eigen::MatrixXd to_matrix(const Eigen::VectorXd& a) const;
  /// Orthogonal projection (trace pairing) of an arbitrary square matrix
  /// onto the span of rep, returned in coordinates.
  Eigen::VectorXd from_matrix(const Eigen::MatrixXd& m) const;

  // residuals over the basis, used by validation tests
  double antisymmetry_residual() const;
  double jacobi_residual() const;
  /// max |pair([a,b],c) + pair(b,[a,c])| over basis triples for the given
  /// metric on coordinates.
  double invariance_residual(const Eigen::MatrixXd& metric) const;

  static LieAlgebra so3();
  static LieAlgebra cso3();
  static LieAlgebra so_k(const KMetric& km);
  static LieAlgebra cso_k(const KMetric& km);
  static LieAlgebra gl3();
  static LieAlgebra u1();
  static LieAlgebra quat();
  static LieAlgebra pure_quat();
  static LieAlgebra make(AlgebraId id,
                         const std::optional<KMetric>& km = std::nullopt);
  /// Same vector space and pairing with the bracket negated (and the matrix
  /// realisation negated, so rep stays a homomorphism). Swaps the roles of
  /// left- and right-invariant systems.
  static LieAlgebra opposite(const LieAlgebra& g);

private:
  std::vector<double> structure_;
  std::vector<double> ad_star_tensor_; // S_{caf}: (ad*_xi mu)_c = S ξ^a μ^f

  void finalize(); // fills pairing_inv, ad_star_tensor_, invariance flag
  friend LieAlgebra make_from_parts(AlgebraId, std::vector<std::string>,
                                    std::vector<double>, Eigen::MatrixXd,
                                    std::vector<Eigen::MatrixXd>,
                                    std::optional<KMetric>);
};

/// Split a cso(3)-like coordinate vector (scalar, vector) from its matrix
/// form: nu0 = Tr(m)/3, vector part from the skew component.
struct CsoDecomposition {
  double scalar;
  Eigen::Vector3d vector;
};
CsoDecomposition decompose_cso(const Eigen::Matrix3d& m, const KMetric& km);

/// Orthogonal projection of a gl(3) matrix onto cso(3):
/// (Tr(a)/3) I + (a - a^T)/2.
Eigen::Matrix3d project_to_cso3(const Eigen::Matrix3d& a);

/// Least-squares projection of a gl(3) matrix onto the rep span of any
/// descriptor with a matrix realisation, in descriptor coordinates.
Eigen::VectorXd project_to_subalgebra(const Eigen::Matrix3d& a,
                                      const LieAlgebra& target);

} // namespace aeplab::algebra

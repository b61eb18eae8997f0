#include "aeplab/algebra/kmetric.hpp"

#include <stdexcept>

namespace aeplab::algebra {

static void check_symmetric_invertible(const Eigen::Matrix3d& k,
                                       const char* name) {
  if ((k - k.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument(std::string(name) + " must be symmetric");
  if (std::abs(k.determinant()) < 1e-12)
    throw std::invalid_argument(std::string(name) + " must be invertible");
}

static KMetric finish(KMetric km) {
  check_symmetric_invertible(km.K, "K");
  check_symmetric_invertible(km.L, "L");
  const Eigen::Matrix3d linv = km.L.inverse();
  km.D = km.L.determinant() * linv * km.K.inverse() * linv;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(km.K);
  km.positive_eigenvalues =
      static_cast<int>((es.eigenvalues().array() > 0.0).count());
  km.definite =
      km.positive_eigenvalues == 3 || km.positive_eigenvalues == 0;
  return km;
}

KMetric KMetric::standard() { return from_k(Eigen::Matrix3d::Identity()); }

KMetric KMetric::from_k(const Eigen::Matrix3d& k) {
  KMetric km;
  km.K = k;
  km.L = k.determinant() * k.inverse();
  return finish(km);
}

KMetric KMetric::from_kl(const Eigen::Matrix3d& k, const Eigen::Matrix3d& l) {
  KMetric km;
  km.K = k;
  km.L = l;
  return finish(km);
}

Eigen::Matrix3d KMetric::invariant_metric() const {
  return (L * K * L) / L.determinant();
}

Eigen::Matrix3d hat(const Eigen::Vector3d& u) {
  Eigen::Matrix3d s;
  s << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  return s;
}

Eigen::Vector3d unhat(const Eigen::Matrix3d& s) {
  return {s(2, 1), s(0, 2), s(1, 0)};
}

Eigen::Matrix3d hat_k(const Eigen::Vector3d& u, const KMetric& km) {
  return km.K.inverse() * hat(km.L * u);
}

Eigen::Vector3d cross_k(const Eigen::Vector3d& u, const Eigen::Vector3d& v,
                        const KMetric& km) {
  return km.D * u.cross(v);
}

double casimir_k(const Eigen::Vector3d& w, const KMetric& km) {
  return 0.5 * w.dot(km.D * w);
}

Eigen::Vector3d casimir_k_gradient(const Eigen::Vector3d& w,
                                   const KMetric& km) {
  return km.D * w;
}

} // namespace aeplab::algebra

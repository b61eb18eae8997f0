#include "aeplab/algebra/quat_cover.hpp"

#include "aeplab/algebra/kmetric.hpp"

namespace aeplab::algebra {

Eigen::Vector4d quat_mul(const Eigen::Vector4d& p, const Eigen::Vector4d& q) {
  const double pw = p[0], qw = q[0];
  const Eigen::Vector3d pv = p.tail<3>(), qv = q.tail<3>();
  Eigen::Vector4d out;
  out[0] = pw * qw - pv.dot(qv);
  out.tail<3>() = pw * qv + qw * pv + pv.cross(qv);
  return out;
}

Eigen::Vector4d quat_conj(const Eigen::Vector4d& q) {
  Eigen::Vector4d out = -q;
  out[0] = q[0];
  return out;
}

Eigen::Matrix3d quat_cover(const Eigen::Vector4d& q) {
  const double w = q[0];
  const Eigen::Vector3d v = q.tail<3>();
  return (w * w - v.squaredNorm()) * Eigen::Matrix3d::Identity() +
         2.0 * (v * v.transpose()) + 2.0 * w * hat(v);
}

Eigen::Matrix3d quat_cover_tangent(const Eigen::Vector4d& p) {
  return 2.0 * (p[0] * Eigen::Matrix3d::Identity() + hat(p.tail<3>()));
}

} // namespace aeplab::algebra

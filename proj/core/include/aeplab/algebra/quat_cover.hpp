#pragma once

#include <Eigen/Dense>

namespace aeplab::algebra {

/// Quaternions as coordinate vectors (w, x, y, z).
Eigen::Vector4d quat_mul(const Eigen::Vector4d& p, const Eigen::Vector4d& q);
Eigen::Vector4d quat_conj(const Eigen::Vector4d& q);

/// Conformal rotation attached to a nonzero quaternion q = (w, v):
///   R(q) = (w^2 - |v|^2) I + 2 v v^T + 2 w hat(v).
/// Satisfies R(p q) = R(p) R(q) on all of H^x, R(q) in CSO(3) with
/// scale |q|^2, and R(q) = R(-q); unit quaternions land in SO(3).
Eigen::Matrix3d quat_cover(const Eigen::Vector4d& q);

/// Derivative of quat_cover at the identity: a tangent quaternion
/// p = (p0, pv) maps to 2 (p0 I + hat(pv)) in cso(3).
Eigen::Matrix3d quat_cover_tangent(const Eigen::Vector4d& p);

} // namespace aeplab::algebra

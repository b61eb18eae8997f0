#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "aeplab/algebra/lie_algebra.hpp"

namespace aeplab::reduction {

/// Finite-dimensional affine Lie-Poisson phase space: points (mu, a) with
/// mu a covector on the algebra (plain coordinates, <mu,xi> = mu.xi) and a
/// a covector on a vector space V carrying a right algebra action
///   u . xi = sum_c xi^c action[c] u,
/// plus an affine shift dc : algebra -> V* (column c is dc(e_c)). The
/// bracket below satisfies Jacobi exactly when dc is a one-cocycle,
///   dc([xi,eta]) = sigma(xi)^T dc(eta) - sigma(eta)^T dc(xi),
/// which every coboundary() is. vdim() == 0 gives the plain Lie-Poisson
/// space of the algebra.
struct SemidirectSpace {
  algebra::LieAlgebra alg;
  std::vector<Eigen::MatrixXd> action;
  Eigen::MatrixXd dc;

  int gdim() const { return alg.dim; }
  int vdim() const {
    return action.empty() ? 0 : static_cast<int>(action.front().rows());
  }

  /// sigma(xi) = sum_c xi^c action[c].
  Eigen::MatrixXd sigma(const Eigen::VectorXd& xi) const;

  /// Largest violation of the right-representation identity
  /// sigma([a,b]) = sigma(b) sigma(a) - sigma(a) sigma(b) over basis pairs.
  double representation_residual() const;
  /// Largest violation of the cocycle identity over basis pairs.
  double cocycle_residual() const;

  /// dc(xi) = sigma(xi)^T b for a fixed covector b; always a cocycle.
  Eigen::MatrixXd coboundary(const Eigen::VectorXd& b) const;

  /// so(3) acting on R^3 by u . xi = u x xi, with dc = coboundary(b).
  static SemidirectSpace so3_r3(const Eigen::Vector3d& b);
  /// cso(3) = scalings + rotations acting on R^3 + R: the right action
  /// u . xi = -rho(xi) u induced by rho(s, w)(v, c) = (s v + w x v, s c),
  /// with dc = coboundary(b).
  static SemidirectSpace cso3_r4(const Eigen::Vector4d& b);
  /// No advected vector space: the Lie-Poisson space of alg alone.
  static SemidirectSpace lie_poisson(algebra::LieAlgebra alg);
};

struct FiniteDimPoint {
  Eigen::VectorXd mu;
  Eigen::VectorXd a;
};

using FiniteDimFunctional = std::function<double(const FiniteDimPoint&)>;

/// Central-difference gradients of f at p; order 2 or 4.
Eigen::VectorXd fd_gradient_mu(const FiniteDimFunctional& f,
                               const FiniteDimPoint& p, double step = 1e-6,
                               int order = 2);
Eigen::VectorXd fd_gradient_a(const FiniteDimFunctional& f,
                              const FiniteDimPoint& p, double step = 1e-6,
                              int order = 2);

/// {f,g}(mu,a) from explicitly supplied gradients:
///   <mu,[xif,xig]> + <a, vf.xig - vg.xif> + <dc(xif),vg> - <dc(xig),vf>.
double affine_lp_bracket(const SemidirectSpace& sp, const FiniteDimPoint& p,
                         const Eigen::VectorXd& xif, const Eigen::VectorXd& vf,
                         const Eigen::VectorXd& xig, const Eigen::VectorXd& vg);

/// Same bracket with finite-difference gradients of f and g.
double affine_lp_bracket_fd(const SemidirectSpace& sp, const FiniteDimPoint& p,
                            const FiniteDimFunctional& f,
                            const FiniteDimFunctional& g, double step = 1e-6,
                            int order = 2);

/// X_h from explicit gradients, defined by df/dt = {f,h} for every f:
///   mudot_c = -(ad*_{xih} mu)_c - <a, action[c] vh> + (dc^T vh)_c,
///   adot    = sigma(xih)^T a - dc xih.
FiniteDimPoint hamiltonian_vector_field(const SemidirectSpace& sp,
                                        const FiniteDimPoint& p,
                                        const Eigen::VectorXd& xih,
                                        const Eigen::VectorXd& vh);

FiniteDimPoint hamiltonian_vector_field_fd(const SemidirectSpace& sp,
                                           const FiniteDimPoint& p,
                                           const FiniteDimFunctional& h,
                                           double step = 1e-6);

/// Cyclic sum {{f,g},k} + {{g,k},f} + {{k,f},g} evaluated by nested finite
/// differences. The inner brackets become functionals carrying FD noise of
/// their own, so the outer gradients use a wider fourth-order stencil to
/// keep the residual floor well under the 1e-5 gate.
double jacobi_residual_fd(const SemidirectSpace& sp, const FiniteDimPoint& p,
                          const FiniteDimFunctional& f,
                          const FiniteDimFunctional& g,
                          const FiniteDimFunctional& k,
                          double inner_step = 1e-6,
                          double outer_step = 1e-2);

} // namespace aeplab::reduction

#include "aeplab/reduction/finite_dim.hpp"

#include <stdexcept>

namespace aeplab::reduction {

Eigen::MatrixXd SemidirectSpace::sigma(const Eigen::VectorXd& xi) const {
  const int n = vdim();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (int c = 0; c < gdim(); ++c) s += xi[c] * action[static_cast<std::size_t>(c)];
  return s;
}

double SemidirectSpace::representation_residual() const {
  double worst = 0.0;
  const int g = gdim();
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      Eigen::VectorXd ea = Eigen::VectorXd::Unit(g, a);
      Eigen::VectorXd eb = Eigen::VectorXd::Unit(g, b);
      Eigen::MatrixXd lhs = sigma(alg.bracket(ea, eb));
      Eigen::MatrixXd rhs = action[static_cast<std::size_t>(b)] *
                                action[static_cast<std::size_t>(a)] -
                            action[static_cast<std::size_t>(a)] *
                                action[static_cast<std::size_t>(b)];
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

double SemidirectSpace::cocycle_residual() const {
  if (vdim() == 0 || dc.size() == 0) return 0.0;
  double worst = 0.0;
  const int g = gdim();
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      Eigen::VectorXd ea = Eigen::VectorXd::Unit(g, a);
      Eigen::VectorXd eb = Eigen::VectorXd::Unit(g, b);
      Eigen::VectorXd lhs = dc * alg.bracket(ea, eb);
      Eigen::VectorXd rhs =
          action[static_cast<std::size_t>(a)].transpose() * dc.col(b) -
          action[static_cast<std::size_t>(b)].transpose() * dc.col(a);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

Eigen::MatrixXd SemidirectSpace::coboundary(const Eigen::VectorXd& b) const {
  Eigen::MatrixXd out(vdim(), gdim());
  for (int c = 0; c < gdim(); ++c)
    out.col(c) = action[static_cast<std::size_t>(c)].transpose() * b;
  return out;
}

namespace {

Eigen::Matrix3d hat(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0, -w[2], w[1], w[2], 0, -w[0], -w[1], w[0], 0;
  return m;
}

} // namespace

SemidirectSpace SemidirectSpace::so3_r3(const Eigen::Vector3d& b) {
  SemidirectSpace sp{algebra::LieAlgebra::so3(), {}, {}};
  for (int c = 0; c < 3; ++c)
    sp.action.push_back(-hat(Eigen::Vector3d::Unit(c)));
  sp.dc = sp.coboundary(b);
  return sp;
}

SemidirectSpace SemidirectSpace::cso3_r4(const Eigen::Vector4d& b) {
  SemidirectSpace sp{algebra::LieAlgebra::cso3(), {}, {}};
  // basis order (s, x, y, z); rho(s, w) = [[s I + hat(w), 0], [0, s]]
  for (int c = 0; c < 4; ++c) {
    Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
    if (c == 0) {
      rho.setIdentity();
    } else {
      rho.topLeftCorner<3, 3>() = hat(Eigen::Vector3d::Unit(c - 1));
    }
    sp.action.push_back(-rho);
  }
  sp.dc = sp.coboundary(b);
  return sp;
}

SemidirectSpace SemidirectSpace::lie_poisson(algebra::LieAlgebra alg) {
  return SemidirectSpace{std::move(alg), {}, {}};
}

namespace {

double central_difference(const std::function<double(double)>& f, double x0,
                          double step, int order) {
  if (order == 4)
    return (8.0 * (f(x0 + step) - f(x0 - step)) -
            (f(x0 + 2.0 * step) - f(x0 - 2.0 * step))) /
           (12.0 * step);
  return (f(x0 + step) - f(x0 - step)) / (2.0 * step);
}

} // namespace

Eigen::VectorXd fd_gradient_mu(const FiniteDimFunctional& f,
                               const FiniteDimPoint& p, double step,
                               int order) {
  Eigen::VectorXd g(p.mu.size());
  FiniteDimPoint q = p;
  for (Eigen::Index i = 0; i < p.mu.size(); ++i) {
    auto slice = [&](double x) {
      q.mu[i] = x;
      return f(q);
    };
    g[i] = central_difference(slice, p.mu[i], step, order);
    q.mu[i] = p.mu[i];
  }
  return g;
}

Eigen::VectorXd fd_gradient_a(const FiniteDimFunctional& f,
                              const FiniteDimPoint& p, double step,
                              int order) {
  Eigen::VectorXd g(p.a.size());
  FiniteDimPoint q = p;
  for (Eigen::Index i = 0; i < p.a.size(); ++i) {
    auto slice = [&](double x) {
      q.a[i] = x;
      return f(q);
    };
    g[i] = central_difference(slice, p.a[i], step, order);
    q.a[i] = p.a[i];
  }
  return g;
}

double affine_lp_bracket(const SemidirectSpace& sp, const FiniteDimPoint& p,
                         const Eigen::VectorXd& xif, const Eigen::VectorXd& vf,
                         const Eigen::VectorXd& xig,
                         const Eigen::VectorXd& vg) {
  double out = p.mu.dot(sp.alg.bracket(xif, xig));
  if (sp.vdim() > 0) {
    // u . xi = sigma(xi) u
    out += p.a.dot(sp.sigma(xig) * vf - sp.sigma(xif) * vg);
    if (sp.dc.size() > 0)
      out += (sp.dc * xif).dot(vg) - (sp.dc * xig).dot(vf);
  }
  return out;
}

double affine_lp_bracket_fd(const SemidirectSpace& sp, const FiniteDimPoint& p,
                            const FiniteDimFunctional& f,
                            const FiniteDimFunctional& g, double step,
                            int order) {
  return affine_lp_bracket(sp, p, fd_gradient_mu(f, p, step, order),
                           fd_gradient_a(f, p, step, order),
                           fd_gradient_mu(g, p, step, order),
                           fd_gradient_a(g, p, step, order));
}

FiniteDimPoint hamiltonian_vector_field(const SemidirectSpace& sp,
                                        const FiniteDimPoint& p,
                                        const Eigen::VectorXd& xih,
                                        const Eigen::VectorXd& vh) {
  const int g = sp.gdim();
  FiniteDimPoint out;
  out.mu = Eigen::VectorXd::Zero(g);
  // (ad*_xi mu)_b = sum_{e,c} mu_e C^e_{cb} xi^c
  for (int b = 0; b < g; ++b) {
    double s = 0.0;
    for (int e = 0; e < g; ++e)
      for (int c = 0; c < g; ++c) s += p.mu[e] * sp.alg.c(e, c, b) * xih[c];
    out.mu[b] = -s;
  }
  if (sp.vdim() > 0) {
    for (int c = 0; c < g; ++c)
      out.mu[c] -= p.a.dot(sp.action[static_cast<std::size_t>(c)] * vh);
    if (sp.dc.size() > 0) out.mu += sp.dc.transpose() * vh;
    out.a = sp.sigma(xih).transpose() * p.a;
    if (sp.dc.size() > 0) out.a -= sp.dc * xih;
  } else {
    out.a = Eigen::VectorXd();
  }
  return out;
}

FiniteDimPoint hamiltonian_vector_field_fd(const SemidirectSpace& sp,
                                           const FiniteDimPoint& p,
                                           const FiniteDimFunctional& h,
                                           double step) {
  return hamiltonian_vector_field(sp, p, fd_gradient_mu(h, p, step),
                                  fd_gradient_a(h, p, step));
}

double jacobi_residual_fd(const SemidirectSpace& sp, const FiniteDimPoint& p,
                          const FiniteDimFunctional& f,
                          const FiniteDimFunctional& g,
                          const FiniteDimFunctional& k, double inner_step,
                          double outer_step) {
  auto nest = [&](const FiniteDimFunctional& x, const FiniteDimFunctional& y) {
    return [&sp, x, y, inner_step](const FiniteDimPoint& q) {
      return affine_lp_bracket_fd(sp, q, x, y, inner_step);
    };
  };
  double s = affine_lp_bracket_fd(sp, p, nest(f, g), k, outer_step, 4) +
             affine_lp_bracket_fd(sp, p, nest(g, k), f, outer_step, 4) +
             affine_lp_bracket_fd(sp, p, nest(k, f), g, outer_step, 4);
  return std::abs(s);
}

} // namespace aeplab::reduction

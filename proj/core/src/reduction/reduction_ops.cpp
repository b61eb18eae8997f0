#include "aeplab/reduction/reduction_ops.hpp"

#include <array>
#include <stdexcept>

namespace aeplab::reduction {

namespace {
constexpr int kMaxG = 16;
using Buf = std::array<double, kMaxG>;
} // namespace

ReductionOps::ReductionOps(const algebra::LieAlgebra& alg,
                           const fields::SpatialOps& ops)
    : alg_(&alg), ops_(&ops) {
  if (alg.dim > kMaxG) throw std::invalid_argument("algebra too large");
}

double ReductionOps::twoform_entry(const fields::Grid& g, const Field& B,
                                   std::size_t node, int alg_comp, int a,
                                   int b, int pairs) {
  if (a == b) return 0.0;
  if (a < b) return B(node, alg_comp * pairs + g.pair_index(a, b));
  return -B(node, alg_comp * pairs + g.pair_index(b, a));
}

Field ReductionOps::bracket(const Field& a, const Field& b) const {
  const int G = gdim();
  Field out(grid(), G);
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    for (int c = 0; c < G; ++c) x[c] = a(node, c), y[c] = b(node, c);
    alg_->bracket_span(x.data(), y.data(), z.data());
    for (int c = 0; c < G; ++c) out(node, c) = z[c];
  }
  return out;
}

Field ReductionOps::ad_star(const Field& xi, const Field& mu) const {
  const int G = gdim();
  Field out(grid(), G);
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    for (int c = 0; c < G; ++c) x[c] = xi(node, c), y[c] = mu(node, c);
    alg_->ad_star_span(x.data(), y.data(), z.data());
    for (int c = 0; c < G; ++c) out(node, c) = z[c];
  }
  return out;
}

Field ReductionOps::pair(const Field& w, const Field& a) const {
  const int G = gdim();
  Field out(grid(), 1);
  Buf x, y;
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    for (int c = 0; c < G; ++c) x[c] = w(node, c), y[c] = a(node, c);
    out(node) = alg_->pair_span(x.data(), y.data());
  }
  return out;
}

Field ReductionOps::pair_oneform(const Field& w, const Field& g) const {
  const int G = gdim(), d = grid().dim;
  Field out(grid(), 1);
  Buf x, y;
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int c = 0; c < G; ++c)
        x[c] = w(node, c * d + i), y[c] = g(node, c * d + i);
      s += alg_->pair_span(x.data(), y.data());
    }
    out(node) = s;
  }
  return out;
}

Field ReductionOps::pair_twoform(const Field& b, const Field& c) const {
  const int G = gdim(), P = grid().pairs();
  Field out(grid(), 1);
  Buf x, y;
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    double s = 0.0;
    for (int p = 0; p < P; ++p) {
      for (int a = 0; a < G; ++a)
        x[a] = b(node, a * P + p), y[a] = c(node, a * P + p);
      s += alg_->pair_span(x.data(), y.data());
    }
    out(node) = s;
  }
  return out;
}

Field ReductionOps::ad_connection(const Field& nu, const Field& gamma) const {
  const int G = gdim(), slots = gamma.ncomp() / G;
  Field out(grid(), gamma.ncomp());
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    for (int c = 0; c < G; ++c) x[c] = nu(node, c);
    for (int i = 0; i < slots; ++i) {
      for (int c = 0; c < G; ++c) y[c] = gamma(node, c * slots + i);
      alg_->bracket_span(x.data(), y.data(), z.data());
      for (int c = 0; c < G; ++c) out(node, c * slots + i) = z[c];
    }
  }
  return out;
}

Field ReductionOps::ad_twoform(const Field& nu, const Field& B) const {
  return ad_connection(nu, B); // same slot-wise bracket
}

Field ReductionOps::covariant_differential(const Field& nu,
                                           const Field& gamma) const {
  const int G = gdim(), d = grid().dim;
  Field out = ops_->grad(nu); // layout a*d + i matches the connection
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int i = 0; i < d; ++i) {
      for (int c = 0; c < G; ++c)
        x[c] = gamma(node, c * d + i), y[c] = nu(node, c);
      alg_->bracket_span(x.data(), y.data(), z.data());
      for (int c = 0; c < G; ++c) out(node, c * d + i) += z[c];
    }
  return out;
}

Field ReductionOps::covariant_divergence(const Field& w,
                                         const Field& gamma) const {
  const int G = gdim(), d = grid().dim;
  Field out(grid(), G);
  for (int k = 0; k < d; ++k) {
    Field pk = ops_->partial(w, k);
    for (std::size_t node = 0; node < grid().nodes; ++node)
      for (int c = 0; c < G; ++c) out(node, c) += pk(node, c * d + k);
  }
  if (gamma.ncomp() > 0) {
    Buf x, y, z;
    for (std::size_t node = 0; node < grid().nodes; ++node)
      for (int k = 0; k < d; ++k) {
        for (int c = 0; c < G; ++c)
          x[c] = gamma(node, c * d + k), y[c] = w(node, c * d + k);
        alg_->ad_star_span(x.data(), y.data(), z.data());
        for (int c = 0; c < G; ++c) out(node, c) -= z[c];
      }
  }
  return out;
}

Field ReductionOps::curvature(const Field& gamma) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), G * P);
  std::vector<Field> dg;
  dg.reserve(d);
  for (int a = 0; a < d; ++a) dg.push_back(ops_->partial(gamma, a));
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int p = 0; p < P; ++p) {
      auto [i, j] = grid().pair_axes(p);
      for (int c = 0; c < G; ++c) {
        x[c] = gamma(node, c * d + i);
        y[c] = gamma(node, c * d + j);
      }
      alg_->bracket_span(x.data(), y.data(), z.data());
      for (int c = 0; c < G; ++c)
        out(node, c * P + p) =
            dg[i](node, c * d + j) - dg[j](node, c * d + i) + z[c];
    }
  return out;
}

Field ReductionOps::covariant_exterior_oneform(const Field& w,
                                               const Field& gamma) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), G * P);
  std::vector<Field> dw;
  dw.reserve(d);
  for (int a = 0; a < d; ++a) dw.push_back(ops_->partial(w, a));
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int p = 0; p < P; ++p) {
      auto [i, j] = grid().pair_axes(p);
      for (int c = 0; c < G; ++c)
        out(node, c * P + p) =
            dw[i](node, c * d + j) - dw[j](node, c * d + i);
    }
  if (gamma.ncomp() > 0) {
    Buf x, y, z, zz;
    for (std::size_t node = 0; node < grid().nodes; ++node)
      for (int p = 0; p < P; ++p) {
        auto [i, j] = grid().pair_axes(p);
        for (int c = 0; c < G; ++c) {
          x[c] = w(node, c * d + i);
          y[c] = gamma(node, c * d + j);
        }
        alg_->bracket_span(x.data(), y.data(), z.data());
        for (int c = 0; c < G; ++c) {
          x[c] = gamma(node, c * d + i);
          y[c] = w(node, c * d + j);
        }
        alg_->bracket_span(x.data(), y.data(), zz.data());
        for (int c = 0; c < G; ++c) out(node, c * P + p) += z[c] + zz[c];
      }
  }
  return out;
}

Field ReductionOps::gamma_of(const Field& u, const Field& gamma) const {
  const int G = gdim(), d = grid().dim;
  Field out(grid(), G);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int c = 0; c < G; ++c) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += u(node, i) * gamma(node, c * d + i);
      out(node, c) = s;
    }
  return out;
}

Field ReductionOps::interior_twoform(const Field& v, const Field& B) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), G * d);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int c = 0; c < G; ++c)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int k = 0; k < d; ++k)
          s += v(node, k) * twoform_entry(grid(), B, node, c, k, j, P);
        out(node, c * d + j) = s;
      }
  return out;
}

Field ReductionOps::divergence_twoform(const Field& b,
                                       const Field& gamma) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), G * d);
  std::vector<Field> db;
  db.reserve(d);
  for (int a = 0; a < d; ++a) db.push_back(ops_->partial(b, a));
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int p = 0; p < P; ++p) {
      auto [i, j] = grid().pair_axes(p);
      for (int c = 0; c < G; ++c) {
        out(node, c * d + j) += db[i](node, c * P + p);
        out(node, c * d + i) -= db[j](node, c * P + p);
      }
    }
  if (gamma.ncomp() > 0) {
    Buf x, y, z;
    for (std::size_t node = 0; node < grid().nodes; ++node)
      for (int p = 0; p < P; ++p) {
        auto [i, j] = grid().pair_axes(p);
        for (int c = 0; c < G; ++c) y[c] = b(node, c * P + p);
        // -ad*_{gamma_i} b^{ij} lands in slot j; +ad*_{gamma_j} b^{ij} in i
        for (int c = 0; c < G; ++c) x[c] = gamma(node, c * d + i);
        alg_->ad_star_span(x.data(), y.data(), z.data());
        for (int c = 0; c < G; ++c) out(node, c * d + j) -= z[c];
        for (int c = 0; c < G; ++c) x[c] = gamma(node, c * d + j);
        alg_->ad_star_span(x.data(), y.data(), z.data());
        for (int c = 0; c < G; ++c) out(node, c * d + i) += z[c];
      }
  }
  return out;
}

Field ReductionOps::divergence_twoform(const Field& b) const {
  return divergence_twoform(b, Field(grid(), 0));
}

Field ReductionOps::lie_oneform(const Field& u, const Field& m) const {
  const int d = grid().dim;
  Field out(grid(), d);
  Field gu = ops_->grad(u); // comp j*d + i = d_i u^j
  std::vector<Field> dm;
  for (int a = 0; a < d; ++a) dm.push_back(ops_->partial(m, a));
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int i = 0; i < d; ++i) {
      double s = 0.0;
      for (int j = 0; j < d; ++j)
        s += u(node, j) * dm[j](node, i) + m(node, j) * gu(node, j * d + i);
      out(node, i) = s;
    }
  return out;
}

Field ReductionOps::lie_connection(const Field& u, const Field& gamma) const {
  const int G = gdim(), d = grid().dim;
  Field out(grid(), G * d);
  Field gu = ops_->grad(u);
  std::vector<Field> dg;
  for (int a = 0; a < d; ++a) dg.push_back(ops_->partial(gamma, a));
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int c = 0; c < G; ++c)
      for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j)
          s += u(node, j) * dg[j](node, c * d + i) +
               gamma(node, c * d + j) * gu(node, j * d + i);
        out(node, c * d + i) = s;
      }
  return out;
}

Field ReductionOps::lie_twoform(const Field& u, const Field& B) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), G * P);
  Field gu = ops_->grad(u);
  std::vector<Field> dB;
  for (int a = 0; a < d; ++a) dB.push_back(ops_->partial(B, a));
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int p = 0; p < P; ++p) {
      auto [k, l] = grid().pair_axes(p);
      for (int c = 0; c < G; ++c) {
        double s = 0.0;
        for (int j = 0; j < d; ++j)
          s += u(node, j) * dB[j](node, c * P + p) +
               twoform_entry(grid(), B, node, c, j, l, P) * gu(node, j * d + k) +
               twoform_entry(grid(), B, node, c, k, j, P) * gu(node, j * d + l);
        out(node, c * P + p) = s;
      }
    }
  return out;
}

Field ReductionOps::momentum_advection(const Field& u, const Field& m) const {
  Field out = lie_oneform(u, m);
  Field du = ops_->divergence(u);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int i = 0; i < grid().dim; ++i) out(node, i) += du(node) * m(node, i);
  return out;
}

Field ReductionOps::transport_divergence(const Field& u,
                                         const Field& f) const {
  const int d = grid().dim, m = f.ncomp();
  Field out(grid(), m);
  for (int k = 0; k < d; ++k) {
    Field prod(grid(), m);
    for (std::size_t node = 0; node < grid().nodes; ++node)
      for (int c = 0; c < m; ++c) prod(node, c) = u(node, k) * f(node, c);
    out += ops_->partial(prod, k);
  }
  return out;
}

Field ReductionOps::directional(const Field& u, const Field& f) const {
  const int d = grid().dim, m = f.ncomp();
  Field out(grid(), m);
  for (int k = 0; k < d; ++k) {
    Field pk = ops_->partial(f, k);
    for (std::size_t node = 0; node < grid().nodes; ++node)
      for (int c = 0; c < m; ++c) out(node, c) += u(node, k) * pk(node, c);
  }
  return out;
}

Field ReductionOps::kappa_d(const Field& kappa, const Field& nu) const {
  const int G = gdim(), d = grid().dim;
  Field out(grid(), d);
  Field gn = ops_->grad(nu);
  Buf x, y;
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int j = 0; j < d; ++j) {
      for (int c = 0; c < G; ++c)
        x[c] = kappa(node, c), y[c] = gn(node, c * d + j);
      out(node, j) = alg_->pair_span(x.data(), y.data());
    }
  return out;
}

Field ReductionOps::diamond_density(const Field& v, const Field& rho) const {
  Field out = ops_->grad(v);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int i = 0; i < grid().dim; ++i) out(node, i) *= rho(node);
  return out;
}

Field ReductionOps::diamond_scalar(const Field& v, const Field& s) const {
  Field out = ops_->grad(s);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int i = 0; i < grid().dim; ++i) out(node, i) *= -v(node);
  return out;
}

Field ReductionOps::diamond1_connection(const Field& w,
                                        const Field& gamma) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), d);
  Field divw = covariant_divergence(w, gamma);
  Field B = curvature(gamma);
  Buf x, y;
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int j = 0; j < d; ++j) {
      for (int c = 0; c < G; ++c)
        x[c] = divw(node, c), y[c] = gamma(node, c * d + j);
      double s = alg_->pair_span(x.data(), y.data());
      for (int i = 0; i < d; ++i) {
        for (int c = 0; c < G; ++c) {
          x[c] = w(node, c * d + i);
          y[c] = twoform_entry(grid(), B, node, c, i, j, P);
        }
        s += alg_->pair_span(x.data(), y.data());
      }
      out(node, j) = s;
    }
  return out;
}

Field ReductionOps::diamond2_connection(const Field& w,
                                        const Field& gamma) const {
  const int G = gdim(), d = grid().dim;
  Field out(grid(), G);
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int i = 0; i < d; ++i) {
      for (int c = 0; c < G; ++c)
        x[c] = gamma(node, c * d + i), y[c] = w(node, c * d + i);
      alg_->ad_star_span(x.data(), y.data(), z.data());
      for (int c = 0; c < G; ++c) out(node, c) -= z[c];
    }
  return out;
}

Field ReductionOps::diamond1_twoform(const Field& b, const Field& B) const {
  const int G = gdim(), d = grid().dim, P = grid().pairs();
  Field out(grid(), d);
  std::vector<Field> dB;
  for (int a = 0; a < d; ++a) dB.push_back(ops_->partial(B, a));
  Buf x, y;
  // -pair(b^{kl}, d_j B_{kl}) accumulated pointwise
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int p = 0; p < P; ++p) {
        for (int c = 0; c < G; ++c) {
          x[c] = b(node, c * P + p);
          y[c] = dB[j](node, c * P + p);
        }
        s -= alg_->pair_span(x.data(), y.data());
      }
      out(node, j) = s;
    }
  // + d_k pair(b^{kl}, B_{jl}) + d_l pair(b^{kl}, B_{kj}) for each pair k<l
  for (int j = 0; j < d; ++j) {
    for (int p = 0; p < P; ++p) {
      auto [k, l] = grid().pair_axes(p);
      Field t2(grid(), 1), t3(grid(), 1);
      for (std::size_t node = 0; node < grid().nodes; ++node) {
        for (int c = 0; c < G; ++c) x[c] = b(node, c * P + p);
        for (int c = 0; c < G; ++c)
          y[c] = twoform_entry(grid(), B, node, c, j, l, P);
        t2(node) = alg_->pair_span(x.data(), y.data());
        for (int c = 0; c < G; ++c)
          y[c] = twoform_entry(grid(), B, node, c, k, j, P);
        t3(node) = alg_->pair_span(x.data(), y.data());
      }
      Field d2 = ops_->partial(t2, k);
      Field d3 = ops_->partial(t3, l);
      for (std::size_t node = 0; node < grid().nodes; ++node)
        out(node, j) += d2(node) + d3(node);
    }
  }
  return out;
}

Field ReductionOps::diamond2_twoform(const Field& b, const Field& B) const {
  const int G = gdim(), P = grid().pairs();
  Field out(grid(), G);
  Buf x, y, z;
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int p = 0; p < P; ++p) {
      for (int c = 0; c < G; ++c)
        x[c] = B(node, c * P + p), y[c] = b(node, c * P + p);
      alg_->ad_star_span(x.data(), y.data(), z.data());
      for (int c = 0; c < G; ++c) out(node, c) -= z[c];
    }
  return out;
}

Field ReductionOps::diamond1_matrix(const Field& m, const Field& i) const {
  const int d = grid().dim;
  Field out(grid(), d);
  for (int j = 0; j < d; ++j) {
    Field dj = ops_->partial(i, j);
    for (std::size_t node = 0; node < grid().nodes; ++node) {
      double s = 0.0;
      for (int c = 0; c < 9; ++c) s += m(node, c) * dj(node, c);
      out(node, j) = -s;
    }
  }
  return out;
}

Field ReductionOps::diamond2_matrix(const Field& m, const Field& i) const {
  Field out(grid(), 9);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k)
          s += i(node, 3 * r + k) * m(node, 3 * c + k) +
               i(node, 3 * k + r) * m(node, 3 * k + c);
        out(node, 3 * r + c) = -s;
      }
  return out;
}

Field ReductionOps::diamond1_director(const Field& m, const Field& n) const {
  const int d = grid().dim;
  Field out(grid(), d);
  for (int j = 0; j < d; ++j) {
    Field dj = ops_->partial(n, j);
    for (std::size_t node = 0; node < grid().nodes; ++node) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m(node, k) * dj(node, k);
      out(node, j) = -s;
    }
  }
  return out;
}

Field ReductionOps::diamond2_director(const Field& m, const Field& n) const {
  Field out(grid(), 3);
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    out(node, 0) = n(node, 1) * m(node, 2) - n(node, 2) * m(node, 1);
    out(node, 1) = n(node, 2) * m(node, 0) - n(node, 0) * m(node, 2);
    out(node, 2) = n(node, 0) * m(node, 1) - n(node, 1) * m(node, 0);
  }
  return out;
}

Field ReductionOps::advect_matrix(const Field& u, const Field& nu,
                                  const Field& i) const {
  Field out = directional(u, i);
  for (std::size_t node = 0; node < grid().nodes; ++node)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k)
          s += nu(node, 3 * k + r) * i(node, 3 * k + c) +
               i(node, 3 * r + k) * nu(node, 3 * k + c);
        out(node, 3 * r + c) += s;
      }
  return out;
}

Field ReductionOps::advect_director(const Field& u, const Field& nu,
                                    const Field& n) const {
  Field out = directional(u, n);
  for (std::size_t node = 0; node < grid().nodes; ++node) {
    out(node, 0) += n(node, 1) * nu(node, 2) - n(node, 2) * nu(node, 1);
    out(node, 1) += n(node, 2) * nu(node, 0) - n(node, 0) * nu(node, 2);
    out(node, 2) += n(node, 0) * nu(node, 1) - n(node, 1) * nu(node, 0);
  }
  return out;
}

} // namespace aeplab::reduction

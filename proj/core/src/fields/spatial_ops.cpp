#include "aeplab/fields/spatial_ops.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace aeplab::fields {

namespace {

using cd = std::complex<double>;

// Visit every 1d line of scalars along the given axis. fn receives the
// flat index of the first scalar of the line and the scalar stride.
template <class F>
void for_each_line(const Grid& g, int axis, int ncomp, F&& fn) {
  const std::size_t line_stride = g.stride[axis] * ncomp;
  for (std::size_t node = 0; node < g.nodes; ++node) {
    if (g.coord(node, axis) != 0) continue;
    for (int c = 0; c < ncomp; ++c) fn(node * ncomp + c, line_stride);
  }
}

} // namespace

const char* to_string(Scheme s) {
  switch (s) {
  case Scheme::spectral: return "spectral";
  case Scheme::centered4: return "centered4";
  case Scheme::centered2: return "centered2";
  }
  return "?";
}

std::optional<Scheme> scheme_from_string(const std::string& s) {
  if (s == "spectral") return Scheme::spectral;
  if (s == "centered4") return Scheme::centered4;
  if (s == "centered2") return Scheme::centered2;
  return std::nullopt;
}

SpatialOps::SpatialOps(const Grid& g, Scheme scheme)
    : SpatialOps(g, scheme, scheme == Scheme::spectral) {}

SpatialOps::SpatialOps(const Grid& g, Scheme scheme, bool dealias)
    : grid_(&g), scheme_(scheme), dealias_(dealias) {
  for (int a = 0; a < g.dim; ++a) {
    const int n = g.n[a];
    wavenumber_[a].resize(n);
    const double base = Grid::two_pi() / g.length[a];
    for (int m = 0; m < n; ++m) {
      int signed_m = (m <= n / 2) ? m : m - n;
      if (n % 2 == 0 && m == n / 2) signed_m = 0; // Nyquist dropped for d/dx
      wavenumber_[a][m] = base * signed_m;
    }
  }
}

void SpatialOps::partial_spectral(const Field& f, int axis, Field& out) const {
  const Grid& g = *grid_;
  const int n = g.n[axis];
  Eigen::FFT<double> fft;
  std::vector<cd> line(n), hat(n);
  const auto& k = wavenumber_[axis];
  const double* src = f.data().data();
  double* dst = out.data().data();
  for_each_line(g, axis, f.ncomp(), [&](std::size_t base, std::size_t stride) {
    for (int i = 0; i < n; ++i) line[i] = cd(src[base + i * stride], 0.0);
    fft.fwd(hat, line);
    for (int m = 0; m < n; ++m) hat[m] *= cd(0.0, k[m]);
    fft.inv(line, hat);
    for (int i = 0; i < n; ++i) dst[base + i * stride] = line[i].real();
  });
}

void SpatialOps::partial_stencil(const Field& f, int axis, Field& out) const {
  const Grid& g = *grid_;
  const int n = g.n[axis];
  const double inv_h = 1.0 / g.h[axis];
  const bool fourth = scheme_ == Scheme::centered4;
  const double* src = f.data().data();
  double* dst = out.data().data();
  for_each_line(g, axis, f.ncomp(), [&](std::size_t base, std::size_t stride) {
    auto at = [&](int i) {
      int w = i % n;
      if (w < 0) w += n;
      return src[base + static_cast<std::size_t>(w) * stride];
    };
    for (int i = 0; i < n; ++i) {
      double d;
      if (fourth)
        d = (8.0 * (at(i + 1) - at(i - 1)) - (at(i + 2) - at(i - 2))) /
            (12.0) * inv_h;
      else
        d = 0.5 * (at(i + 1) - at(i - 1)) * inv_h;
      dst[base + static_cast<std::size_t>(i) * stride] = d;
    }
  });
}

Field SpatialOps::partial(const Field& f, int axis) const {
  if (axis < 0 || axis >= grid_->dim)
    throw std::invalid_argument("derivative axis out of range");
  Field out(*grid_, f.ncomp());
  if (scheme_ == Scheme::spectral)
    partial_spectral(f, axis, out);
  else
    partial_stencil(f, axis, out);
  return out;
}

Field SpatialOps::grad(const Field& f) const {
  const int d = grid_->dim, m = f.ncomp();
  Field out(*grid_, m * d);
  for (int a = 0; a < d; ++a) {
    Field pa = partial(f, a);
    for (std::size_t node = 0; node < grid_->nodes; ++node)
      for (int c = 0; c < m; ++c) out(node, c * d + a) = pa(node, c);
  }
  return out;
}

Field SpatialOps::divergence(const Field& f) const {
  const int d = grid_->dim;
  if (f.ncomp() % d != 0)
    throw std::invalid_argument("divergence needs ncomp divisible by dim");
  const int m = f.ncomp() / d;
  Field out(*grid_, m);
  for (int a = 0; a < d; ++a) {
    Field pa = partial(f, a);
    for (std::size_t node = 0; node < grid_->nodes; ++node)
      for (int c = 0; c < m; ++c) out(node, c) += pa(node, c * d + a);
  }
  return out;
}

Field SpatialOps::curl(const Field& f) const {
  const int d = grid_->dim;
  if (d == 3) {
    if (f.ncomp() != 3) throw std::invalid_argument("curl needs 3 components");
    Field out(*grid_, 3);
    for (int c = 0; c < 3; ++c) {
      const int a = (c + 1) % 3, b = (c + 2) % 3;
      Field da = partial(f, a), db = partial(f, b);
      for (std::size_t node = 0; node < grid_->nodes; ++node)
        out(node, c) = da(node, b) - db(node, a);
    }
    return out;
  }
  if (d == 2) {
    if (f.ncomp() != 2) throw std::invalid_argument("curl needs 2 components");
    Field out(*grid_, 1);
    Field dx = partial(f, 0), dy = partial(f, 1);
    for (std::size_t node = 0; node < grid_->nodes; ++node)
      out(node) = dx(node, 1) - dy(node, 0);
    return out;
  }
  throw std::invalid_argument("curl needs dim 2 or 3");
}

Field SpatialOps::laplacian(const Field& f) const {
  Field out(*grid_, f.ncomp());
  for (int a = 0; a < grid_->dim; ++a) out += partial(partial(f, a), a);
  return out;
}

void SpatialOps::dealias(Field& f) const {
  if (scheme_ != Scheme::spectral || !dealias_) return;
  const Grid& g = *grid_;
  Eigen::FFT<double> fft;
  for (int a = 0; a < g.dim; ++a) {
    const int n = g.n[a];
    const int cut = n / 3;
    std::vector<cd> line(n), hat(n);
    double* dat = f.data().data();
    for_each_line(g, a, f.ncomp(),
                  [&](std::size_t base, std::size_t stride) {
                    for (int i = 0; i < n; ++i)
                      line[i] = cd(dat[base + i * stride], 0.0);
                    fft.fwd(hat, line);
                    for (int m = 0; m < n; ++m) {
                      int sm = (m <= n / 2) ? m : m - n;
                      if (std::abs(sm) > cut) hat[m] = cd(0.0, 0.0);
                    }
                    fft.inv(line, hat);
                    for (int i = 0; i < n; ++i)
                      dat[base + i * stride] = line[i].real();
                  });
  }
}

Eigen::VectorXd SpatialOps::sample_linear(const Field& f,
                                          const Eigen::Vector3d& x) const {
  const Grid& g = *grid_;
  const int d = g.dim, nc = f.ncomp();
  std::array<int, 3> i0{0, 0, 0};
  std::array<double, 3> t{0.0, 0.0, 0.0};
  for (int a = 0; a < d; ++a) {
    double u = x[a] / g.h[a];
    double fl = std::floor(u);
    t[a] = u - fl;
    int base = static_cast<int>(fl) % g.n[a];
    if (base < 0) base += g.n[a];
    i0[a] = base;
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nc);
  const int corners = 1 << d;
  for (int corner = 0; corner < corners; ++corner) {
    double w = 1.0;
    std::array<int, 3> idx{0, 0, 0};
    for (int a = 0; a < d; ++a) {
      const bool hi = corner & (1 << a);
      w *= hi ? t[a] : 1.0 - t[a];
      idx[a] = hi ? (i0[a] + 1) % g.n[a] : i0[a];
    }
    const std::size_t node = g.index(idx[0], idx[1], idx[2]);
    for (int c = 0; c < nc; ++c) out[c] += w * f(node, c);
  }
  return out;
}

Eigen::MatrixXd SpatialOps::sample_spectral_many(
    const Field& f, const std::vector<Eigen::Vector3d>& xs) const {
  const Grid& g = *grid_;
  const int nc = f.ncomp();
  Eigen::FFT<double> fft;

  // full multi-axis transform of each component
  std::vector<std::vector<cd>> hat(nc, std::vector<cd>(g.nodes));
  for (int c = 0; c < nc; ++c)
    for (std::size_t node = 0; node < g.nodes; ++node)
      hat[c][node] = cd(f(node, c), 0.0);
  for (int a = 0; a < g.dim; ++a) {
    const int n = g.n[a];
    std::vector<cd> line(n), tr(n);
    for (int c = 0; c < nc; ++c) {
      auto& h = hat[c];
      for (std::size_t node = 0; node < g.nodes; ++node) {
        if (g.coord(node, a) != 0) continue;
        for (int i = 0; i < n; ++i) line[i] = h[node + i * g.stride[a]];
        fft.fwd(tr, line);
        for (int i = 0; i < n; ++i) h[node + i * g.stride[a]] = tr[i];
      }
    }
  }

  Eigen::MatrixXd out(static_cast<Eigen::Index>(xs.size()), nc);
  const double norm = 1.0 / static_cast<double>(g.nodes);
  std::array<std::vector<cd>, 3> w;
  for (std::size_t p = 0; p < xs.size(); ++p) {
    for (int a = 0; a < g.dim; ++a) {
      const int n = g.n[a];
      const double base = Grid::two_pi() / g.length[a];
      w[a].assign(n, cd(1.0, 0.0));
      for (int m = 0; m < n; ++m) {
        const int sm = (m <= n / 2) ? m : m - n;
        const double kx = base * sm * xs[p][a];
        if (n % 2 == 0 && m == n / 2)
          w[a][m] = cd(std::cos(kx), 0.0); // symmetric Nyquist evaluation
        else
          w[a][m] = cd(std::cos(kx), std::sin(kx));
      }
    }
    for (int c = 0; c < nc; ++c) {
      cd acc(0.0, 0.0);
      for (std::size_t node = 0; node < g.nodes; ++node) {
        cd ww = w[0][g.coord(node, 0)];
        if (g.dim > 1) ww *= w[1][g.coord(node, 1)];
        if (g.dim > 2) ww *= w[2][g.coord(node, 2)];
        acc += hat[c][node] * ww;
      }
      out(static_cast<Eigen::Index>(p), c) = acc.real() * norm;
    }
  }
  return out;
}

Eigen::VectorXd SpatialOps::sample_spectral(const Field& f,
                                            const Eigen::Vector3d& x) const {
  return sample_spectral_many(f, {x}).row(0);
}

} // namespace aeplab::fields

#include "aeplab/reduction/loops.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace aeplab::reduction {

const char* to_string(MarkerSampling s) {
  return s == MarkerSampling::linear ? "linear" : "spectral";
}

std::optional<MarkerSampling>
marker_sampling_from_string(const std::string& s) {
  if (s == "linear") return MarkerSampling::linear;
  if (s == "spectral") return MarkerSampling::spectral;
  return std::nullopt;
}

Loop circle_loop(const Eigen::Vector3d& center, double radius, int nmarkers,
                 int axis_a, int axis_b) {
  if (nmarkers < 8) throw std::invalid_argument("loop needs >= 8 markers");
  Loop loop;
  loop.x.reserve(static_cast<std::size_t>(nmarkers));
  for (int k = 0; k < nmarkers; ++k) {
    const double th =
        fields::Grid::two_pi() * static_cast<double>(k) / nmarkers;
    Eigen::Vector3d p = center;
    p[axis_a] += radius * std::cos(th);
    p[axis_b] += radius * std::sin(th);
    loop.x.push_back(p);
  }
  return loop;
}

Eigen::MatrixXd sample_at(const fields::SpatialOps& ops,
                          const fields::Field& f,
                          const std::vector<Eigen::Vector3d>& xs,
                          MarkerSampling how) {
  if (how == MarkerSampling::spectral) return ops.sample_spectral_many(f, xs);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(xs.size()), f.ncomp());
  for (std::size_t p = 0; p < xs.size(); ++p)
    out.row(static_cast<Eigen::Index>(p)) = ops.sample_linear(f, xs[p]);
  return out;
}

std::vector<Eigen::Vector3d> loop_tangents(const Loop& loop) {
  using cd = std::complex<double>;
  const int n = static_cast<int>(loop.x.size());
  std::vector<Eigen::Vector3d> out(loop.x.size(), Eigen::Vector3d::Zero());
  // direct DFT per axis; loops hold at most a few hundred markers
  std::vector<cd> hat(static_cast<std::size_t>(n));
  for (int ax = 0; ax < 3; ++ax) {
    for (int m = 0; m < n; ++m) {
      cd acc(0.0, 0.0);
      for (int k = 0; k < n; ++k) {
        const double ph = -fields::Grid::two_pi() * m * k / n;
        acc += loop.x[static_cast<std::size_t>(k)][ax] *
               cd(std::cos(ph), std::sin(ph));
      }
      hat[static_cast<std::size_t>(m)] = acc / static_cast<double>(n);
    }
    for (int m = 0; m < n; ++m) {
      const int sm = (m <= n / 2) ? m : m - n;
      if (n % 2 == 0 && m == n / 2) {
        hat[static_cast<std::size_t>(m)] = cd(0.0, 0.0);
      } else {
        hat[static_cast<std::size_t>(m)] *= cd(0.0, static_cast<double>(sm));
      }
    }
    for (int k = 0; k < n; ++k) {
      cd acc(0.0, 0.0);
      for (int m = 0; m < n; ++m) {
        const double ph = fields::Grid::two_pi() * m * k / n;
        acc += hat[static_cast<std::size_t>(m)] * cd(std::cos(ph), std::sin(ph));
      }
      out[static_cast<std::size_t>(k)][ax] = acc.real();
    }
  }
  return out;
}

Eigen::VectorXd loop_integral_blocks(const fields::SpatialOps& ops,
                                     const fields::Field& f, const Loop& loop,
                                     MarkerSampling how) {
  const int d = ops.grid().dim;
  if (f.ncomp() % d != 0)
    throw std::invalid_argument("field components not blocks of one-forms");
  const int nb = f.ncomp() / d;
  const auto n = loop.x.size();
  const Eigen::MatrixXd vals = sample_at(ops, f, loop.x, how);
  const std::vector<Eigen::Vector3d> tangents = loop_tangents(loop);
  const double dtheta = fields::Grid::two_pi() / static_cast<double>(n);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nb);
  for (std::size_t k = 0; k < n; ++k)
    for (int b = 0; b < nb; ++b)
      for (int ax = 0; ax < d; ++ax)
        out[b] += vals(static_cast<Eigen::Index>(k), b * d + ax) *
                  tangents[k][ax] * dtheta;
  return out;
}

double loop_integral_oneform(const fields::SpatialOps& ops,
                             const fields::Field& f, const Loop& loop,
                             MarkerSampling how) {
  return loop_integral_blocks(ops, f, loop, how)[0];
}

} // namespace aeplab::reduction

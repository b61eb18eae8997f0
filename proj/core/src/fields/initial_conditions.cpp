#include "aeplab/fields/initial_conditions.hpp"

#include <cmath>

namespace aeplab::fields {

void add_cosine(Field& f, int comp, const Eigen::Vector3i& mode, double amp,
                double phase) {
  const Grid& g = f.grid();
  for (std::size_t node = 0; node < g.nodes; ++node) {
    double arg = phase;
    for (int a = 0; a < g.dim; ++a)
      arg += Grid::two_pi() * mode[a] * g.coord(node, a) / g.n[a];
    f(node, comp) += amp * std::cos(arg);
  }
}

void add_bump(Field& f, int comp, const Eigen::Vector3d& center, double width,
              double amp) {
  const Grid& g = f.grid();
  const double pi = 0.5 * Grid::two_pi();
  for (std::size_t node = 0; node < g.nodes; ++node) {
    double e = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double L = g.length[a];
      const double s = std::sin(pi * (g.h[a] * g.coord(node, a) - center[a]) / L);
      const double sigma = pi * width / L;
      e -= s * s / (2.0 * sigma * sigma);
    }
    f(node, comp) += amp * std::exp(e);
  }
}

void add_random_band(Field& f, int comp, std::mt19937_64& rng, int kmin,
                     int kmax, double amp) {
  const Grid& g = f.grid();
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, Grid::two_pi());

  std::vector<Eigen::Vector3i> modes;
  Eigen::Vector3i m = Eigen::Vector3i::Zero();
  const int lo = -kmax, hi = kmax;
  for (int mx = (g.dim >= 1 ? lo : 0); mx <= (g.dim >= 1 ? hi : 0); ++mx)
    for (int my = (g.dim >= 2 ? lo : 0); my <= (g.dim >= 2 ? hi : 0); ++my)
      for (int mz = (g.dim >= 3 ? lo : 0); mz <= (g.dim >= 3 ? hi : 0); ++mz) {
        m = Eigen::Vector3i(mx, my, mz);
        const int mag = m.cwiseAbs().maxCoeff();
        if (mag < std::max(1, kmin) || mag > kmax) continue;
        // keep one representative of each {m, -m} pair
        if (mx < 0 || (mx == 0 && (my < 0 || (my == 0 && mz < 0)))) continue;
        modes.push_back(m);
      }
  if (modes.empty()) return;
  const double scale = amp / std::sqrt(static_cast<double>(modes.size()));
  for (const auto& mode : modes)
    add_cosine(f, comp, mode, scale * gauss(rng), uni(rng));
}

void add_uniform(Field& f, int comp, double value) {
  for (std::size_t node = 0; node < f.grid().nodes; ++node)
    f(node, comp) += value;
}

void fill_random_smooth(Field& f, std::mt19937_64& rng, int kmax, double amp) {
  for (int c = 0; c < f.ncomp(); ++c) add_random_band(f, c, rng, 1, kmax, amp);
}

} // namespace aeplab::fields

#include "aeplab/fields/grid.hpp"

#include <stdexcept>

namespace aeplab::fields {

Grid Grid::make(int dim, const std::array<int, 3>& n,
                const std::array<double, 3>& length) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid dim must be 1..3");
  Grid g;
  g.dim = dim;
  g.nodes = 1;
  for (int a = 0; a < 3; ++a) {
    if (a < dim) {
      if (n[a] < 4) throw std::invalid_argument("grid needs at least 4 nodes");
      if (length[a] <= 0.0) throw std::invalid_argument("box length <= 0");
      g.n[a] = n[a];
      g.length[a] = length[a];
      g.h[a] = length[a] / n[a];
    } else {
      g.n[a] = 1;
      g.length[a] = 0.0;
      g.h[a] = 1.0; // never used; keeps position() finite
    }
    g.stride[a] = g.nodes;
    g.nodes *= g.n[a];
  }
  return g;
}

Grid Grid::line(int nx, double lx) { return make(1, {nx, 1, 1}, {lx, 0, 0}); }

Grid Grid::square(int nx, double lx) {
  return make(2, {nx, nx, 1}, {lx, lx, 0});
}

Grid Grid::box(int nx, double lx) {
  return make(3, {nx, nx, nx}, {lx, lx, lx});
}

} // namespace aeplab::fields

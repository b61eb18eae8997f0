#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

namespace aeplab::fields {

/// Uniform periodic grid on a flat box in 1, 2, or 3 dimensions.
/// Nodes are stored x-fastest; unused axes have size 1.
struct Grid {
  int dim = 1;
  std::array<int, 3> n{1, 1, 1};
  std::array<double, 3> length{0.0, 0.0, 0.0};
  std::array<double, 3> h{0.0, 0.0, 0.0};
  std::array<std::size_t, 3> stride{1, 1, 1};
  std::size_t nodes = 1;

  static Grid line(int nx, double lx = two_pi());
  static Grid square(int nx, double lx = two_pi());
  static Grid box(int nx, double lx = two_pi());
  static Grid make(int dim, const std::array<int, 3>& n,
                   const std::array<double, 3>& length);

  static constexpr double two_pi() { return 6.283185307179586476925286766559; }

  std::size_t index(int i, int j = 0, int k = 0) const {
    return static_cast<std::size_t>(i) + stride[1] * j + stride[2] * k;
  }
  int coord(std::size_t node, int axis) const {
    return static_cast<int>((node / stride[axis]) % n[axis]);
  }
  Eigen::Vector3d position(std::size_t node) const {
    return {h[0] * coord(node, 0), h[1] * coord(node, 1),
            h[2] * coord(node, 2)};
  }
  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= h[a];
    return v;
  }

  /// Antisymmetric index pairs (a, b), a < b, enumerating the independent
  /// components of a two-form: d=2 -> {(0,1)}, d=3 -> {(0,1),(0,2),(1,2)}.
  int pairs() const { return dim * (dim - 1) / 2; }
  std::array<int, 2> pair_axes(int p) const {
    static constexpr std::array<std::array<int, 2>, 3> table{
        {{0, 1}, {0, 2}, {1, 2}}};
    return table[p];
  }
  int pair_index(int a, int b) const { // requires a < b
    return (a == 0) ? (b - 1) : 2;
  }

  bool operator==(const Grid& o) const {
    return dim == o.dim && n == o.n && length == o.length;
  }
};

} // namespace aeplab::fields

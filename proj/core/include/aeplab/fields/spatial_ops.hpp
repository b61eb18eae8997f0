#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "aeplab/fields/field.hpp"
#include "aeplab/fields/grid.hpp"

namespace aeplab::fields {

enum class Scheme { spectral, centered4, centered2 };

const char* to_string(Scheme s);
std::optional<Scheme> scheme_from_string(const std::string& s);

/// Periodic spatial calculus on a grid. All three schemes share exact
/// discrete summation by parts: sum f (D g) = -sum (D f) g over the box,
/// which the layer above relies on to make adjoint pairs exactly adjoint.
/// The spectral derivative zeroes the Nyquist mode, keeping it real and
/// antisymmetric on even grids.
class SpatialOps {
public:
  SpatialOps(const Grid& g, Scheme scheme);
  SpatialOps(const Grid& g, Scheme scheme, bool dealias);

  const Grid& grid() const { return *grid_; }
  Scheme scheme() const { return scheme_; }
  bool dealias_enabled() const { return dealias_; }

  /// d/dx_axis of every component.
  Field partial(const Field& f, int axis) const;
  /// All partials: ncomp m -> m*dim with layout c*dim + axis.
  Field grad(const Field& f) const;
  /// Contraction over the axis slot: ncomp m*dim -> m,
  /// out_c = sum_axis d_axis f[c*dim + axis].
  Field divergence(const Field& f) const;
  /// dim 3: vector curl (3 comps); dim 2: scalar curl d_x f_y - d_y f_x.
  Field curl(const Field& f) const;
  Field laplacian(const Field& f) const;

  /// Two-thirds rule spectral truncation, idempotent. Applied by models to
  /// assembled tangents when dealias_enabled(); identity for non-spectral
  /// schemes.
  void dealias(Field& f) const;

  /// Periodic multilinear interpolation at an arbitrary point.
  Eigen::VectorXd sample_linear(const Field& f, const Eigen::Vector3d& x) const;
  /// Trigonometric (spectrally exact) interpolation; the Nyquist mode is
  /// evaluated as a cosine so real fields stay real.
  Eigen::VectorXd sample_spectral(const Field& f,
                                  const Eigen::Vector3d& x) const;
  Eigen::MatrixXd sample_spectral_many(const Field& f,
                                       const std::vector<Eigen::Vector3d>& xs)
      const;

private:
  const Grid* grid_;
  Scheme scheme_;
  bool dealias_;
  std::array<std::vector<double>, 3> wavenumber_; // signed k per axis mode

  void partial_spectral(const Field& f, int axis, Field& out) const;
  void partial_stencil(const Field& f, int axis, Field& out) const;
};

} // namespace aeplab::fields

#pragma once

#include <Eigen/Dense>

#include "aeplab/fields/grid.hpp"

namespace aeplab::fields {

/// Multi-component grid function. Components of one node are contiguous:
/// value(node, c) sits at data()[node * ncomp + c]. What the components
/// mean (vector axes, Lie algebra coordinates, form indices) is decided by
/// the layer above; this class only provides storage and vector-space ops.
class Field {
public:
  Field() = default;
  Field(const Grid& g, int ncomp)
      : grid_(&g), ncomp_(ncomp),
        data_(Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(g.nodes) *
                                   ncomp)) {}

  const Grid& grid() const { return *grid_; }
  int ncomp() const { return ncomp_; }
  std::size_t size() const { return static_cast<std::size_t>(data_.size()); }

  double operator()(std::size_t node, int c = 0) const {
    return data_[node * ncomp_ + c];
  }
  double& operator()(std::size_t node, int c = 0) {
    return data_[node * ncomp_ + c];
  }

  Eigen::ArrayXd& data() { return data_; }
  const Eigen::ArrayXd& data() const { return data_; }

  void set_zero() { data_.setZero(); }

  Field& operator+=(const Field& o) {
    data_ += o.data_;
    return *this;
  }
  Field& operator-=(const Field& o) {
    data_ -= o.data_;
    return *this;
  }
  Field& operator*=(double a) {
    data_ *= a;
    return *this;
  }
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(double a, Field f) { return f *= a; }
  friend Field operator*(Field f, double a) { return f *= a; }

private:
  const Grid* grid_ = nullptr;
  int ncomp_ = 0;
  Eigen::ArrayXd data_;
};

/// Box integral per component: cell_volume * sum over nodes.
Eigen::VectorXd integral(const Field& f);
/// Box integral of a single-component field.
double integral_scalar(const Field& f);
/// L2 norm over the box, all components together.
double l2_norm(const Field& f);
/// L2 inner product over the box, all components together.
double l2_inner(const Field& a, const Field& b);
double max_abs(const Field& f);

/// Pointwise dot over a component range: out(node) =
/// sum_{c} a(node, ca+c) * b(node, cb+c), c = 0..count-1.
Field pointwise_dot(const Field& a, int ca, const Field& b, int cb, int count);

} // namespace aeplab::fields

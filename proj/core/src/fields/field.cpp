#include "aeplab/fields/field.hpp"

#include <cmath>
#include <stdexcept>

namespace aeplab::fields {

Eigen::VectorXd integral(const Field& f) {
  const int nc = f.ncomp();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(nc);
  for (std::size_t node = 0; node < f.grid().nodes; ++node)
    for (int c = 0; c < nc; ++c) out[c] += f(node, c);
  return f.grid().cell_volume() * out;
}

double integral_scalar(const Field& f) {
  if (f.ncomp() != 1) throw std::invalid_argument("expected one component");
  return f.grid().cell_volume() * f.data().sum();
}

double l2_norm(const Field& f) {
  return std::sqrt(f.grid().cell_volume() * f.data().square().sum());
}

double l2_inner(const Field& a, const Field& b) {
  return a.grid().cell_volume() * (a.data() * b.data()).sum();
}

double max_abs(const Field& f) {
  return f.size() == 0 ? 0.0 : f.data().abs().maxCoeff();
}

Field pointwise_dot(const Field& a, int ca, const Field& b, int cb,
                    int count) {
  Field out(a.grid(), 1);
  for (std::size_t node = 0; node < a.grid().nodes; ++node) {
    double s = 0.0;
    for (int c = 0; c < count; ++c) s += a(node, ca + c) * b(node, cb + c);
    out(node) = s;
  }
  return out;
}

} // namespace aeplab::fields

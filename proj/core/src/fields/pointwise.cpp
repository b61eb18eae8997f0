#include "aeplab/fields/pointwise.hpp"

#include <stdexcept>

namespace aeplab::fields {

Field slice(const Field& f, int c0, int count) {
  Field out(f.grid(), count);
  for (std::size_t node = 0; node < f.grid().nodes; ++node)
    for (int c = 0; c < count; ++c) out(node, c) = f(node, c0 + c);
  return out;
}

void paste(Field& dst, int c0, const Field& src) {
  for (std::size_t node = 0; node < dst.grid().nodes; ++node)
    for (int c = 0; c < src.ncomp(); ++c) dst(node, c0 + c) = src(node, c);
}

Field scale_by(const Field& f, const Field& s) {
  Field out = f;
  for (std::size_t node = 0; node < f.grid().nodes; ++node)
    for (int c = 0; c < f.ncomp(); ++c) out(node, c) *= s(node);
  return out;
}

Field divide_by(const Field& f, const Field& s) {
  Field out = f;
  for (std::size_t node = 0; node < f.grid().nodes; ++node)
    for (int c = 0; c < f.ncomp(); ++c) out(node, c) /= s(node);
  return out;
}

Field pointwise_matmul(const Field& a, const Field& b) {
  Field out(a.grid(), 9);
  for (std::size_t node = 0; node < a.grid().nodes; ++node)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += a(node, 3 * i + k) * b(node, 3 * k + j);
        out(node, 3 * i + j) = s;
      }
  return out;
}

Field pointwise_transpose(const Field& a) {
  Field out(a.grid(), 9);
  for (std::size_t node = 0; node < a.grid().nodes; ++node)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out(node, 3 * i + j) = a(node, 3 * j + i);
  return out;
}

Field matrix_times_vector(const Field& a, const Field& v) {
  Field out(a.grid(), 3);
  for (std::size_t node = 0; node < a.grid().nodes; ++node)
    for (int i = 0; i < 3; ++i) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(node, 3 * i + k) * v(node, k);
      out(node, i) = s;
    }
  return out;
}

Field pointwise_trace(const Field& a) {
  Field out(a.grid(), 1);
  for (std::size_t node = 0; node < a.grid().nodes; ++node)
    out(node) = a(node, 0) + a(node, 4) + a(node, 8);
  return out;
}

Field pointwise_det(const Field& a) {
  Field out(a.grid(), 1);
  for (std::size_t node = 0; node < a.grid().nodes; ++node) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = a(node, 3 * i + j);
    out(node) = m.determinant();
  }
  return out;
}

Field pointwise_cross(const Field& a, const Field& b) {
  Field out(a.grid(), 3);
  for (std::size_t node = 0; node < a.grid().nodes; ++node) {
    out(node, 0) = a(node, 1) * b(node, 2) - a(node, 2) * b(node, 1);
    out(node, 1) = a(node, 2) * b(node, 0) - a(node, 0) * b(node, 2);
    out(node, 2) = a(node, 0) * b(node, 1) - a(node, 1) * b(node, 0);
  }
  return out;
}

Field pointwise_dot3(const Field& a, const Field& b) {
  return pointwise_dot(a, 0, b, 0, 3);
}

} // namespace aeplab::fields

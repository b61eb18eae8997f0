#pragma once

#include "aeplab/fields/field.hpp"

namespace aeplab::fields {

/// Extract components [c0, c0+count) into a new field.
Field slice(const Field& f, int c0, int count);
/// Write src (count comps) into dst components [c0, c0+count).
void paste(Field& dst, int c0, const Field& src);

/// Multiply every component of f by the single-component field s.
Field scale_by(const Field& f, const Field& s);
/// Divide every component of f by the single-component field s.
Field divide_by(const Field& f, const Field& s);

/// 3x3 matrix fields stored row-major (9 comps, index 3 i + j).
Field pointwise_matmul(const Field& a, const Field& b);
Field pointwise_transpose(const Field& a);
Field matrix_times_vector(const Field& a, const Field& v); // 9,3 -> 3
Field pointwise_trace(const Field& a);                     // 9 -> 1
Field pointwise_det(const Field& a);                       // 9 -> 1

/// 3-component fields.
Field pointwise_cross(const Field& a, const Field& b);
Field pointwise_dot3(const Field& a, const Field& b); // 3,3 -> 1

/// Apply a per-node map: out(node) = fn(node). Allocates ncomp_out comps.
template <class F>
Field map_nodes(const Grid& g, int ncomp_out, F&& fn) {
  Field out(g, ncomp_out);
  for (std::size_t node = 0; node < g.nodes; ++node) fn(node, out);
  return out;
}

} // namespace aeplab::fields

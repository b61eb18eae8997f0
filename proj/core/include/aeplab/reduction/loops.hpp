#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aeplab/fields/spatial_ops.hpp"

namespace aeplab::reduction {

/// How circulation-loop markers read grid fields between nodes.
enum class MarkerSampling { linear, spectral };

const char* to_string(MarkerSampling s);
std::optional<MarkerSampling> marker_sampling_from_string(const std::string& s);

/// Closed material loop: marker positions in unwrapped coordinates (the
/// samplers apply periodicity). Segment k joins x[k] to x[(k+1) % size].
struct Loop {
  std::vector<Eigen::Vector3d> x;
};

/// Circle of nmarkers in the (axis_a, axis_b) plane around center.
Loop circle_loop(const Eigen::Vector3d& center, double radius, int nmarkers,
                 int axis_a = 0, int axis_b = 1);

/// Sample every component of f at the given points, one row per point.
Eigen::MatrixXd sample_at(const fields::SpatialOps& ops,
                          const fields::Field& f,
                          const std::vector<Eigen::Vector3d>& xs,
                          MarkerSampling how);

/// dx/dtheta at every marker, where theta is the loop label with uniform
/// spacing 2 pi / size: a discrete Fourier derivative along the marker
/// index. Markers keep their label under advection, so this stays
/// spectrally accurate for smooth flows.
std::vector<Eigen::Vector3d> loop_tangents(const Loop& loop);

/// Line integral around the loop of a field made of ncomp/d blocks of d
/// one-form components each (layout block*d + axis): the periodic
/// trapezoid rule in the loop label, using loop_tangents. Entry b is the
/// circulation of block b.
Eigen::VectorXd loop_integral_blocks(const fields::SpatialOps& ops,
                                     const fields::Field& f, const Loop& loop,
                                     MarkerSampling how);

/// Circulation of a single d-component one-form.
double loop_integral_oneform(const fields::SpatialOps& ops,
                             const fields::Field& f, const Loop& loop,
                             MarkerSampling how);

} // namespace aeplab::reduction

#pragma once

#include <cstdint>
#include <random>

#include "aeplab/fields/field.hpp"

namespace aeplab::fields {

/// Add amp * cos(2 pi (mode . x / length) + phase) to one component.
void add_cosine(Field& f, int comp, const Eigen::Vector3i& mode, double amp,
                double phase = 0.0);

/// Add a smooth periodic bump to one component: the product over axes of
/// exp(-sin^2(pi (x - c) / L) / (2 (pi w / L)^2)), which matches a Gaussian
/// of width w near the center and is exactly periodic.
void add_bump(Field& f, int comp, const Eigen::Vector3d& center, double width,
              double amp);

/// Add a random-phase band of cosines to one component: every integer mode
/// with 1 <= max_axis |m| <= kmax (and >= kmin) enters with a normal
/// amplitude scaled so the expected rms is about amp.
void add_random_band(Field& f, int comp, std::mt19937_64& rng, int kmin,
                     int kmax, double amp);

void add_uniform(Field& f, int comp, double value);

/// Fill every component with an independent random band; convenience for
/// smooth generic states.
void fill_random_smooth(Field& f, std::mt19937_64& rng, int kmax, double amp);

} // namespace aeplab::fields

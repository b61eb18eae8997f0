#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aeplab/integrate/system.hpp"

namespace aeplab::integrate {

enum class TimeScheme { rk4, ssprk3 };

const char* to_string(TimeScheme s);
std::optional<TimeScheme> time_scheme_from_string(const std::string& s);

/// Nominal convergence order of the scheme.
int scheme_order(TimeScheme s);

/// One fixed step of the chosen scheme. Loop markers, when given, are
/// advanced inside the same stages with the velocity of their family,
/// sampled at stage marker positions from stage states.
void step(const System& sys, TimeScheme scheme, double dt, State& s,
          std::vector<LoopFamily>* families,
          reduction::MarkerSampling sampling =
              reduction::MarkerSampling::spectral);

} // namespace aeplab::integrate

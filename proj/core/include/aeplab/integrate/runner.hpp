#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "aeplab/integrate/stepper.hpp"

namespace aeplab::integrate {

struct IntegratorConfig {
  TimeScheme scheme = TimeScheme::rk4;
  double dt = 1e-3;
  double t_end = 1.0;
  /// Advisory threshold: the runner never changes dt, callers may warn
  /// when cfl_estimate exceeds this.
  double cfl_safety = 0.5;
  int diagnostic_every = 1;
  int snapshot_every = 0;
  reduction::MarkerSampling marker_sampling =
      reduction::MarkerSampling::spectral;
};

/// Thrown when a step produces a NaN or infinity. The state passed to
/// run() is rolled back to the last finite step so callers can save it.
class SimulationError : public std::runtime_error {
public:
  SimulationError(int step_, double t_, std::string block_);
  int step;
  double t;
  std::string block;
};

struct RunCallbacks {
  using Hook = std::function<void(int step, double t, const State& s,
                                  const std::vector<LoopFamily>& families)>;
  Hook on_diagnostic; // step 0, every diagnostic_every steps, final step
  Hook on_snapshot;   // every snapshot_every steps (0 disables), final step
};

/// Fixed-step integration to t_end = nsteps * dt (nsteps rounded). Returns
/// the number of steps taken.
int run(const System& sys, const IntegratorConfig& cfg, State& s,
        std::vector<LoopFamily>& families, const RunCallbacks& cb = {});

/// dt * max over nodes of sum_axis |u_axis| / h_axis, maximised over the
/// system's transport velocities.
double cfl_estimate(const System& sys, const State& s, double dt);

} // namespace aeplab::integrate

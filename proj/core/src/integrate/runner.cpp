#include "aeplab/integrate/runner.hpp"

#include <cmath>

namespace aeplab::integrate {

SimulationError::SimulationError(int step_, double t_, std::string block_)
    : std::runtime_error("non-finite value in block '" + block_ +
                         "' at step " + std::to_string(step_) + ", t = " +
                         std::to_string(t_)),
      step(step_), t(t_), block(std::move(block_)) {}

int run(const System& sys, const IntegratorConfig& cfg, State& s,
        std::vector<LoopFamily>& families, const RunCallbacks& cb) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (cfg.t_end < 0.0) throw std::invalid_argument("t_end must be >= 0");
  const int nsteps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));

  if (cb.on_diagnostic) cb.on_diagnostic(0, 0.0, s, families);
  if (cb.on_snapshot && cfg.snapshot_every > 0)
    cb.on_snapshot(0, 0.0, s, families);

  State prev = s;
  std::vector<LoopFamily> prev_families = families;
  for (int k = 1; k <= nsteps; ++k) {
    prev = s;
    prev_families = families;
    step(sys, cfg.scheme, cfg.dt, s, &families, cfg.marker_sampling);
    const double t = cfg.dt * k;
    const std::string bad = s.first_nonfinite();
    if (!bad.empty()) {
      s = prev;
      families = prev_families;
      throw SimulationError(k, t, bad);
    }
    const bool last = k == nsteps;
    if (cb.on_diagnostic &&
        (last || (cfg.diagnostic_every > 0 && k % cfg.diagnostic_every == 0)))
      cb.on_diagnostic(k, t, s, families);
    if (cb.on_snapshot && cfg.snapshot_every > 0 &&
        (last || k % cfg.snapshot_every == 0))
      cb.on_snapshot(k, t, s, families);
  }
  return nsteps;
}

double cfl_estimate(const System& sys, const State& s, double dt) {
  const fields::Grid& g = sys.grid();
  double worst = 0.0;
  for (int which = 0; which < sys.velocity_count(); ++which) {
    const fields::Field u = sys.velocity(s, which);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      double rate = 0.0;
      for (int ax = 0; ax < g.dim; ++ax)
        rate += std::abs(u(node, ax)) / g.h[ax];
      worst = std::max(worst, rate);
    }
  }
  return dt * worst;
}

} // namespace aeplab::integrate

#include "aeplab/integrate/stepper.hpp"

#include <stdexcept>

namespace aeplab::integrate {

const char* to_string(TimeScheme s) {
  return s == TimeScheme::rk4 ? "rk4" : "ssprk3";
}

std::optional<TimeScheme> time_scheme_from_string(const std::string& s) {
  if (s == "rk4") return TimeScheme::rk4;
  if (s == "ssprk3") return TimeScheme::ssprk3;
  return std::nullopt;
}

int scheme_order(TimeScheme s) { return s == TimeScheme::rk4 ? 4 : 3; }

namespace {

// marker positions flattened per family (loops concatenated)
using Positions = std::vector<std::vector<Eigen::Vector3d>>;

Positions gather(const std::vector<LoopFamily>& families) {
  Positions pos(families.size());
  for (std::size_t f = 0; f < families.size(); ++f)
    for (const reduction::Loop& l : families[f].loops)
      pos[f].insert(pos[f].end(), l.x.begin(), l.x.end());
  return pos;
}

void scatter(const Positions& pos, std::vector<LoopFamily>& families) {
  for (std::size_t f = 0; f < families.size(); ++f) {
    std::size_t at = 0;
    for (reduction::Loop& l : families[f].loops)
      for (Eigen::Vector3d& x : l.x) x = pos[f][at++];
  }
}

/// dX/dt for every family's markers at the given stage.
Positions marker_velocities(const System& sys, const State& s,
                            const std::vector<LoopFamily>& families,
                            const Positions& pos,
                            reduction::MarkerSampling sampling) {
  const int d = sys.grid().dim;
  Positions vel(pos.size());
  for (std::size_t f = 0; f < families.size(); ++f) {
    vel[f].assign(pos[f].size(), Eigen::Vector3d::Zero());
    if (pos[f].empty()) continue;
    const fields::Field u = sys.velocity(s, families[f].velocity);
    const Eigen::MatrixXd v =
        reduction::sample_at(sys.spatial(), u, pos[f], sampling);
    for (std::size_t k = 0; k < pos[f].size(); ++k)
      for (int ax = 0; ax < d; ++ax)
        vel[f][k][ax] = v(static_cast<Eigen::Index>(k), ax);
  }
  return vel;
}

Positions combine(const Positions& a, double ca, const Positions& b,
                  double cb) {
  Positions out(a.size());
  for (std::size_t f = 0; f < a.size(); ++f) {
    out[f].resize(a[f].size());
    for (std::size_t k = 0; k < a[f].size(); ++k)
      out[f][k] = ca * a[f][k] + cb * b[f][k];
  }
  return out;
}

void accumulate(Positions& y, const Positions& x, double c) {
  for (std::size_t f = 0; f < y.size(); ++f)
    for (std::size_t k = 0; k < y[f].size(); ++k) y[f][k] += c * x[f][k];
}

} // namespace

void step(const System& sys, TimeScheme scheme, double dt, State& s,
          std::vector<LoopFamily>* families,
          reduction::MarkerSampling sampling) {
  const std::vector<LoopFamily> no_families;
  const std::vector<LoopFamily>& fams = families ? *families : no_families;
  Positions x0 = gather(fams);

  auto marker_rate = [&](const State& stage, const Positions& xs) {
    return marker_velocities(sys, stage, fams, xs, sampling);
  };

  if (scheme == TimeScheme::rk4) {
    State k1(sys.grid(), sys.layout());
    State k2 = k1, k3 = k1, k4 = k1;
    State stage = s;

    sys.tangent(s, k1);
    Positions w1 = marker_rate(s, x0);

    stage = s;
    stage.add_scaled(k1, 0.5 * dt);
    Positions x2 = x0;
    accumulate(x2, w1, 0.5 * dt);
    sys.tangent(stage, k2);
    Positions w2 = marker_rate(stage, x2);

    stage = s;
    stage.add_scaled(k2, 0.5 * dt);
    Positions x3 = x0;
    accumulate(x3, w2, 0.5 * dt);
    sys.tangent(stage, k3);
    Positions w3 = marker_rate(stage, x3);

    stage = s;
    stage.add_scaled(k3, dt);
    Positions x4 = x0;
    accumulate(x4, w3, dt);
    sys.tangent(stage, k4);
    Positions w4 = marker_rate(stage, x4);

    s.add_scaled(k1, dt / 6.0);
    s.add_scaled(k2, dt / 3.0);
    s.add_scaled(k3, dt / 3.0);
    s.add_scaled(k4, dt / 6.0);
    accumulate(x0, w1, dt / 6.0);
    accumulate(x0, w2, dt / 3.0);
    accumulate(x0, w3, dt / 3.0);
    accumulate(x0, w4, dt / 6.0);
    if (families) scatter(x0, *families);
    return;
  }

  // ssprk3 in Shu-Osher form
  State k(sys.grid(), sys.layout());

  sys.tangent(s, k);
  Positions w = marker_rate(s, x0);
  State u1 = s;
  u1.add_scaled(k, dt);
  Positions x1 = x0;
  accumulate(x1, w, dt);

  sys.tangent(u1, k);
  w = marker_rate(u1, x1);
  State u2 = s;
  u2 *= 0.75;
  u2.add_scaled(u1, 0.25);
  u2.add_scaled(k, 0.25 * dt);
  Positions x2 = combine(x0, 0.75, x1, 0.25);
  accumulate(x2, w, 0.25 * dt);

  sys.tangent(u2, k);
  w = marker_rate(u2, x2);
  s *= 1.0 / 3.0;
  s.add_scaled(u2, 2.0 / 3.0);
  s.add_scaled(k, 2.0 / 3.0 * dt);
  Positions xf = combine(x0, 1.0 / 3.0, x2, 2.0 / 3.0);
  accumulate(xf, w, 2.0 / 3.0 * dt);
  if (families) scatter(xf, *families);
}

} // namespace aeplab::integrate

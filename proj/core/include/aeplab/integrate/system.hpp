#pragma once

#include <string_view>
#include <vector>

#include "aeplab/fields/spatial_ops.hpp"
#include "aeplab/integrate/state.hpp"
#include "aeplab/reduction/loops.hpp"

namespace aeplab::integrate {

/// A dynamical system the steppers can advance: a state layout, its time
/// derivative, an energy, and the transport velocities that move material
/// loops. Implementations must make tangent() a pure function of the state
/// so staged schemes and restarts stay deterministic.
class System {
public:
  virtual ~System() = default;

  virtual std::string_view name() const = 0;
  virtual const fields::Grid& grid() const = 0;
  virtual const fields::SpatialOps& spatial() const = 0;
  virtual std::vector<BlockSpec> layout() const = 0;

  virtual void tangent(const State& s, State& dsdt) const = 0;
  virtual double energy(const State& s) const = 0;

  /// Independent transport velocities (two-fluid systems have more than
  /// one family of material loops).
  virtual int velocity_count() const { return 1; }
  /// The which-th transport velocity, d components.
  virtual fields::Field velocity(const State& s, int which) const = 0;
};

/// Material loops advected with one of the system's velocities.
struct LoopFamily {
  std::string name;
  int velocity = 0;
  std::vector<reduction::Loop> loops;
};

} // namespace aeplab::integrate

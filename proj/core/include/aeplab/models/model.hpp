#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "aeplab/integrate/system.hpp"
#include "aeplab/reduction/advection.hpp"
#include "aeplab/reduction/reduction_ops.hpp"

namespace aeplab::models {

using fields::Field;
using integrate::State;

/// Raised when a state leaves a model's validity domain: nonpositive
/// density, singular microinertia, a closure that fails to converge.
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Scalar functional of the state, sampled at the diagnostic cadence.
/// Monitors measure drift; they never project the state back.
struct Monitor {
  std::string name;
  std::function<double(const State&)> eval;
};

/// Circulation identity d/dt loop(lhs_form) = loop(rhs_form) along loops
/// moving with the model velocity of the given family. rhs_form is the
/// advective rate (d/dt + Lie_u) of lhs_form assembled analytically, so the
/// recorded defect isolates the time discretization error.
struct CirculationLaw {
  std::string name;
  int family = 0;
  std::function<Field(const State&)> lhs_form;
  std::function<Field(const State&)> rhs_form;
};

/// Advected state block: name plus the transport law acting on it.
struct AdvectedBlock {
  std::string name;
  reduction::AdvectionLaw law;
};

/// Functional derivatives of the Hamiltonian at a state. u pairs with the
/// momentum block, nu with the spin momentum block, advected[k] with the
/// k-th advected block in layout order (same component count).
struct FunctionalDerivatives {
  Field u;
  Field nu;
  std::vector<Field> advected;
};

/// Dual-side force of the advection law, paired against the velocity.
/// Returns d components.
Field diamond_velocity(const reduction::ReductionOps& red,
                       reduction::AdvectionLaw law, const Field& w,
                       const Field& b);

/// Dual-side force of the advection law, paired against the spin rate, in
/// algebra coordinates (the pairing inverse is applied where the raw
/// adjoint lives in matrix or vector coordinates). Empty field when the law
/// has no fiber leg.
Field diamond_fiber(const reduction::ReductionOps& red,
                    reduction::AdvectionLaw law, const Field& w,
                    const Field& b);

/// A concrete continuum model: state layout, parameters, energy, and the
/// structure maps the integrator and diagnostics consume. Immutable after
/// construction; evaluators are const and reentrant.
class Model : public integrate::System {
public:
  Model(std::string id, const fields::Grid& grid, fields::Scheme scheme,
        algebra::LieAlgebra alg);

  std::string_view name() const override { return id_; }
  const fields::Grid& grid() const override { return *grid_; }
  const fields::SpatialOps& spatial() const override { return ops_; }

  const algebra::LieAlgebra& alg() const { return alg_; }
  const reduction::ReductionOps& reduction() const { return red_; }

  /// Zero state with this model's layout.
  State make_state() const { return State(*grid_, layout()); }

  virtual std::vector<Monitor> monitors() const = 0;
  virtual std::vector<CirculationLaw> circulation_laws() const { return {}; }
  virtual std::map<std::string, double> parameters() const = 0;
  virtual std::string description() const = 0;

protected:
  /// Truncate every block of an assembled tangent (identity unless the
  /// scheme is spectral with dealiasing on).
  void filter(State& s) const;
  /// Throws ModelError unless f > 0 everywhere.
  void require_positive(const Field& f, const char* what) const;

  std::string id_;
  const fields::Grid* grid_;
  fields::SpatialOps ops_;
  algebra::LieAlgebra alg_;
  reduction::ReductionOps red_;
};

/// Hamiltonian-side model over one particle-relabeling group. The state
/// holds an optional momentum one-form block, an optional spin momentum
/// block, and the advected blocks; tangent() is assembled from
/// derivatives() through the advection laws and their adjoint diamonds, so
/// exact energy conservation of the spatial discretization reduces to the
/// tested adjointness identities.
class HamiltonianFluidModel : public Model {
public:
  using Model::Model;

  /// Name of the momentum block; empty when the model has no fluid part.
  virtual std::string momentum_block() const { return "m"; }
  /// Name of the spin momentum block; empty when absent.
  virtual std::string spin_block() const { return "kappa"; }
  virtual std::vector<AdvectedBlock> advected_blocks() const = 0;
  virtual FunctionalDerivatives derivatives(const State& s) const = 0;
  /// Domain check run before each tangent assembly.
  virtual void validate(const State&) const {}

  std::vector<integrate::BlockSpec> layout() const override;
  void tangent(const State& s, State& dsdt) const override;
  Field velocity(const State& s, int which) const override;

protected:
  /// d/dt loop(lhs/rho) = loop(rate/rho) with rate the non-transport part
  /// of the momentum tangent; the classical circulation pair of the
  /// momentum equation.
  CirculationLaw kelvin_law(const std::string& rho_block) const;
  /// d/dt loop(gamma) = loop(gammadot + Lie_u gamma) for a connection
  /// block; reduces to the fiber rotation rate up to an exact form.
  CirculationLaw connection_circulation_law(const std::string& gamma_block,
                                            int family = 0) const;
};

} // namespace aeplab::models

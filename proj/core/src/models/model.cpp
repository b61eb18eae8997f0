#include "aeplab/models/model.hpp"

#include "aeplab/fields/pointwise.hpp"

namespace aeplab::models {

using reduction::AdvectionLaw;

Model::Model(std::string id, const fields::Grid& grid, fields::Scheme scheme,
             algebra::LieAlgebra alg)
    : id_(std::move(id)),
      grid_(&grid),
      ops_(grid, scheme, true),
      alg_(std::move(alg)),
      red_(alg_, ops_) {}

void Model::filter(State& s) const {
  for (int b = 0; b < s.nblocks(); ++b) ops_.dealias(s.block(b));
}

void Model::require_positive(const Field& f, const char* what) const {
  if (f.data().minCoeff() <= 0.0)
    throw ModelError(id_ + ": nonpositive " + what);
}

Field diamond_velocity(const reduction::ReductionOps& red, AdvectionLaw law,
                       const Field& w, const Field& b) {
  switch (law) {
  case AdvectionLaw::density:
    return red.diamond_density(w, b);
  case AdvectionLaw::scalar:
    return red.diamond_scalar(w, b);
  case AdvectionLaw::connectionAffine:
    return red.diamond1_connection(w, b);
  case AdvectionLaw::symTensorConjugation:
    return red.diamond1_matrix(w, b);
  case AdvectionLaw::directorLinear:
    return red.diamond1_director(w, b);
  case AdvectionLaw::velocityOneFormAffine: {
    // (div w) b_j + sum_i w_i (d_i b_j - d_j b_i): the abelian connection
    // force written with plain derivatives.
    const auto& ops = red.spatial();
    const fields::Grid& g = ops.grid();
    const int d = g.dim;
    Field divw = ops.divergence(w);
    Field db = ops.grad(b); // (i, j) at b-comp i, axis j
    Field out(g, d);
    for (std::size_t node = 0; node < g.nodes; ++node)
      for (int j = 0; j < d; ++j) {
        double s = divw(node) * b(node, j);
        for (int i = 0; i < d; ++i)
          s += w(node, i) * (db(node, j * d + i) - db(node, i * d + j));
        out(node, j) = s;
      }
    return out;
  }
  }
  throw std::logic_error("unhandled advection law");
}

Field diamond_fiber(const reduction::ReductionOps& red, AdvectionLaw law,
                    const Field& w, const Field& b) {
  const fields::Grid& g = red.grid();
  const auto& alg = red.alg();
  const int G = alg.dim;
  switch (law) {
  case AdvectionLaw::density:
  case AdvectionLaw::scalar:
    return Field(g, 0);
  case AdvectionLaw::connectionAffine:
    return red.covariant_divergence(w, b);
  case AdvectionLaw::velocityOneFormAffine:
    return red.spatial().divergence(w);
  case AdvectionLaw::symTensorConjugation: {
    // Project the matrix-coordinate adjoint onto the algebra through the
    // representation, then undo the pairing.
    Field raw = red.diamond2_matrix(w, b);
    Field out(g, G);
    Eigen::VectorXd gvec(G);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      for (int a = 0; a < G; ++a) {
        const Eigen::MatrixXd& rep = alg.rep[static_cast<std::size_t>(a)];
        double s = 0.0;
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) s += raw(node, 3 * r + c) * rep(r, c);
        gvec[a] = s;
      }
      Eigen::VectorXd f = alg.pairing_inv * gvec;
      for (int a = 0; a < G; ++a) out(node, a) = f[a];
    }
    return out;
  }
  case AdvectionLaw::directorLinear: {
    Field raw = red.diamond2_director(w, b);
    Field out(g, G);
    Eigen::VectorXd gvec(G);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      for (int a = 0; a < G; ++a) gvec[a] = raw(node, a);
      Eigen::VectorXd f = alg.pairing_inv * gvec;
      for (int a = 0; a < G; ++a) out(node, a) = f[a];
    }
    return out;
  }
  }
  throw std::logic_error("unhandled advection law");
}

std::vector<integrate::BlockSpec> HamiltonianFluidModel::layout() const {
  std::vector<integrate::BlockSpec> out;
  if (const std::string m = momentum_block(); !m.empty())
    out.push_back({m, grid_->dim});
  if (const std::string k = spin_block(); !k.empty())
    out.push_back({k, alg_.dim});
  for (const AdvectedBlock& b : advected_blocks())
    out.push_back({b.name, reduction::advected_ncomp(b.law, *grid_, alg_.dim)});
  return out;
}

void HamiltonianFluidModel::tangent(const State& s, State& dsdt) const {
  validate(s);
  const FunctionalDerivatives d = derivatives(s);
  const auto blocks = advected_blocks();
  const std::string mname = momentum_block();
  const std::string kname = spin_block();
  const Field* u = mname.empty() ? nullptr : &d.u;
  const Field* nu = kname.empty() ? nullptr : &d.nu;

  dsdt.set_zero();
  if (u) {
    Field& mdot = dsdt.block(mname);
    mdot -= red_.momentum_advection(d.u, s.block(mname));
    if (nu) mdot -= red_.kappa_d(s.block(kname), d.nu);
    for (std::size_t k = 0; k < blocks.size(); ++k)
      mdot -= diamond_velocity(red_, blocks[k].law, d.advected[k],
                               s.block(blocks[k].name));
  }
  if (nu) {
    Field& kdot = dsdt.block(kname);
    kdot -= red_.ad_star(d.nu, s.block(kname));
    if (u) kdot -= red_.transport_divergence(d.u, s.block(kname));
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      Field f = diamond_fiber(red_, blocks[k].law, d.advected[k],
                              s.block(blocks[k].name));
      if (f.ncomp() > 0) kdot -= f;
    }
  }
  for (const AdvectedBlock& b : blocks)
    dsdt.block(b.name) =
        reduction::advection_tangent(red_, b.law, s.block(b.name), u, nu);
  filter(dsdt);
}

Field HamiltonianFluidModel::velocity(const State& s, int which) const {
  (void)which;
  if (momentum_block().empty()) return Field(*grid_, grid_->dim);
  return derivatives(s).u;
}

CirculationLaw HamiltonianFluidModel::kelvin_law(
    const std::string& rho_block) const {
  CirculationLaw law;
  law.name = "kelvin";
  law.family = 0;
  law.lhs_form = [this, rho_block](const State& s) {
    return fields::divide_by(s.block(momentum_block()), s.block(rho_block));
  };
  law.rhs_form = [this, rho_block](const State& s) {
    State dsdt = make_state();
    tangent(s, dsdt);
    Field rate = dsdt.block(momentum_block()) +
                 red_.momentum_advection(derivatives(s).u,
                                         s.block(momentum_block()));
    return fields::divide_by(rate, s.block(rho_block));
  };
  return law;
}

CirculationLaw HamiltonianFluidModel::connection_circulation_law(
    const std::string& gamma_block, int family) const {
  CirculationLaw law;
  law.name = gamma_block + "_circulation";
  law.family = family;
  law.lhs_form = [gamma_block](const State& s) { return s.block(gamma_block); };
  law.rhs_form = [this, gamma_block, family](const State& s) {
    State dsdt = make_state();
    tangent(s, dsdt);
    Field rate = dsdt.block(gamma_block);
    if (!momentum_block().empty())
      rate += red_.lie_connection(velocity(s, family), s.block(gamma_block));
    return rate;
  };
  return law;
}

} // namespace aeplab::models

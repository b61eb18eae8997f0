#include "aeplab/models/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "aeplab/fields/pointwise.hpp"

namespace aeplab::models {

namespace {

using reduction::AdvectionLaw;

/// Per-axis slice of an algebra-valued one-form (G comps at axis i).
Field axis_slice(const fields::Grid& g, int G, const Field& gamma, int i) {
  const int d = g.dim;
  Field out(g, G);
  for (std::size_t node = 0; node < g.nodes; ++node)
    for (int c = 0; c < G; ++c) out(node, c) = gamma(node, c * d + i);
  return out;
}

void axis_paste(Field& gamma, int G, const Field& src, int i) {
  const int d = gamma.grid().dim;
  for (std::size_t node = 0; node < gamma.grid().nodes; ++node)
    for (int c = 0; c < G; ++c) gamma(node, c * d + i) = src(node, c);
}

class SpinSystem final : public HamiltonianFluidModel {
public:
  SpinSystem(const fields::Grid& g, fields::Scheme scheme,
             algebra::LieAlgebra alg, double eps, double rigidity,
             SpinLagrangian choice)
      : HamiltonianFluidModel("spin_system", g, scheme, std::move(alg)),
        eps_(eps),
        rigidity_(rigidity),
        choice_(choice) {
    if (eps_ <= 0.0 || rigidity_ <= 0.0)
      throw std::invalid_argument(
          "spin_system: susceptibility and rigidity must be positive");
  }

  std::string momentum_block() const override { return {}; }
  std::vector<AdvectedBlock> advected_blocks() const override {
    return {{"gamma", AdvectionLaw::connectionAffine}};
  }

  FunctionalDerivatives derivatives(const State& s) const override {
    require_quadratic();
    FunctionalDerivatives d;
    d.nu = (1.0 / eps_) * s.block("kappa");
    d.advected.push_back(rigidity_ * s.block("gamma"));
    return d;
  }

  double energy(const State& s) const override {
    require_quadratic();
    const Field& kappa = s.block("kappa");
    const Field& gamma = s.block("gamma");
    return 0.5 / eps_ * fields::integral_scalar(red_.pair(kappa, kappa)) +
           0.5 * rigidity_ *
               fields::integral_scalar(red_.pair_oneform(gamma, gamma));
  }

  std::vector<Monitor> monitors() const override {
    return {{"curvatureNorm", [this](const State& s) {
               Field B = red_.curvature(s.block("gamma"));
               return std::sqrt(
                   fields::integral_scalar(red_.pair_twoform(B, B)));
             }}};
  }

  std::vector<CirculationLaw> circulation_laws() const override {
    return {connection_circulation_law("gamma")};
  }

  std::map<std::string, double> parameters() const override {
    return {{"susceptibility", eps_},
            {"rigidity", rigidity_},
            {"lagrangian", static_cast<double>(choice_)}};
  }

  std::string description() const override {
    return "Spin momentum precessing against a connection over a fixed "
           "domain.\n"
           "  state: kappa (spin momentum density), gamma (connection "
           "one-form)\n"
           "  dkappa/dt = -ad*_nu kappa - div^gamma(rigidity gamma),  nu = "
           "kappa/susceptibility\n"
           "  dgamma/dt = -d^gamma nu\n"
           "  h = 1/(2 susceptibility) Int |kappa|^2 + rigidity/2 Int "
           "|gamma|^2.\n"
           "  Flat gamma stays flat; loop integrals of gamma rotate at rate "
           "ad_nu gamma.\n"
           "  The perpendicular and parallel Lagrangian choices have "
           "singular inertia and ship as evaluators only.";
  }

private:
  void require_quadratic() const {
    if (choice_ != SpinLagrangian::quadratic)
      throw ModelError(
          "spin_system: only the quadratic Lagrangian integrates; the "
          "perpendicular and parallel choices have a singular inertia "
          "operator (evaluators only)");
  }

  double eps_;
  double rigidity_;
  SpinLagrangian choice_;
};

} // namespace

SpinLagrangianDerivatives spin_lagrangian(const reduction::ReductionOps& red,
                                          SpinLagrangian which,
                                          const Field& nu, const Field& gamma,
                                          double susceptibility,
                                          double rigidity) {
  const fields::Grid& g = red.grid();
  const int G = red.gdim(), d = g.dim;
  SpinLagrangianDerivatives out;
  out.dl_dnu = Field(g, G);
  out.dl_dgamma = Field(g, G * d);
  switch (which) {
  case SpinLagrangian::quadratic: {
    out.dl_dnu = susceptibility * nu;
    out.dl_dgamma = -rigidity * gamma;
    out.value =
        0.5 * susceptibility * fields::integral_scalar(red.pair(nu, nu)) -
        0.5 * rigidity *
            fields::integral_scalar(red.pair_oneform(gamma, gamma));
    return out;
  }
  case SpinLagrangian::perpendicular: {
    double val = 0.0;
    for (int i = 0; i < d; ++i) {
      Field gi = axis_slice(g, G, gamma, i);
      Field br = red.bracket(nu, gi);
      out.dl_dnu -= red.ad_star(gi, br);
      axis_paste(out.dl_dgamma, G, red.ad_star(nu, br), i);
      val += 0.5 * fields::integral_scalar(red.pair(br, br));
    }
    out.value = val;
    return out;
  }
  case SpinLagrangian::parallel: {
    double val = 0.0;
    for (int i = 0; i < d; ++i) {
      Field gi = axis_slice(g, G, gamma, i);
      Field alpha = red.pair(nu, gi);
      out.dl_dnu += fields::scale_by(gi, alpha);
      axis_paste(out.dl_dgamma, G, fields::scale_by(nu, alpha), i);
      val += 0.5 * fields::integral_scalar(fields::scale_by(alpha, alpha));
    }
    out.value = val;
    return out;
  }
  }
  throw std::logic_error("unhandled spin lagrangian");
}

std::unique_ptr<Model> make_spin_system(const fields::Grid& grid,
                                        fields::Scheme scheme,
                                        algebra::LieAlgebra alg,
                                        double susceptibility, double rigidity,
                                        SpinLagrangian choice) {
  return std::make_unique<SpinSystem>(grid, scheme, std::move(alg),
                                      susceptibility, rigidity, choice);
}

} // namespace aeplab::models

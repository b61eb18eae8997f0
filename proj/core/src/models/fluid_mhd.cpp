#include "aeplab/models/fluids.hpp"

#include "aeplab/fields/pointwise.hpp"

namespace aeplab::models {

namespace {

using reduction::AdvectionLaw;

/// -1/2 |m|^2/rho^2 + e + rho e_rho per node: the density derivative of the
/// kinetic plus internal energy.
Field density_derivative(const fields::Grid& g, const IdealGasEos& eos,
                         const Field& m, const Field& rho, const Field& s) {
  const int d = g.dim;
  Field out(g, 1);
  for (std::size_t node = 0; node < g.nodes; ++node) {
    double m2 = 0.0;
    for (int i = 0; i < d; ++i) m2 += m(node, i) * m(node, i);
    const double r = rho(node), sv = s(node);
    out(node) = -0.5 * m2 / (r * r) + eos.e(r, sv) + r * eos.e_rho(r, sv);
  }
  return out;
}

Field entropy_derivative(const fields::Grid& g, const IdealGasEos& eos,
                         const Field& rho, const Field& s) {
  Field out(g, 1);
  for (std::size_t node = 0; node < g.nodes; ++node)
    out(node) = rho(node) * eos.e_s(rho(node), s(node));
  return out;
}

double fluid_energy(const fields::Grid& g, const IdealGasEos& eos,
                    const Field& m, const Field& rho, const Field& s) {
  const int d = g.dim;
  Field h(g, 1);
  for (std::size_t node = 0; node < g.nodes; ++node) {
    double m2 = 0.0;
    for (int i = 0; i < d; ++i) m2 += m(node, i) * m(node, i);
    const double r = rho(node);
    h(node) = 0.5 * m2 / r + r * eos.e(r, s(node));
  }
  return fields::integral_scalar(h);
}

std::vector<Monitor> fluid_monitors() {
  return {
      {"massTotal",
       [](const State& s) { return fields::integral_scalar(s.block("rho")); }},
      {"entropyTotal",
       [](const State& s) {
         return fields::integral_scalar(
             fields::scale_by(s.block("s"), s.block("rho")));
       }},
  };
}

class IdealFluid final : public HamiltonianFluidModel {
public:
  IdealFluid(const fields::Grid& g, fields::Scheme scheme, IdealGasEos eos)
      : HamiltonianFluidModel("ideal_fluid", g, scheme,
                              algebra::LieAlgebra::u1()),
        eos_(eos) {}

  std::string spin_block() const override { return {}; }
  std::vector<AdvectedBlock> advected_blocks() const override {
    return {{"rho", AdvectionLaw::density}, {"s", AdvectionLaw::scalar}};
  }

  void validate(const State& s) const override {
    require_positive(s.block("rho"), "density");
  }

  FunctionalDerivatives derivatives(const State& s) const override {
    FunctionalDerivatives d;
    d.u = fields::divide_by(s.block("m"), s.block("rho"));
    d.advected.push_back(
        density_derivative(*grid_, eos_, s.block("m"), s.block("rho"),
                           s.block("s")));
    d.advected.push_back(
        entropy_derivative(*grid_, eos_, s.block("rho"), s.block("s")));
    return d;
  }

  double energy(const State& s) const override {
    return fluid_energy(*grid_, eos_, s.block("m"), s.block("rho"),
                        s.block("s"));
  }

  std::vector<Monitor> monitors() const override { return fluid_monitors(); }

  std::vector<CirculationLaw> circulation_laws() const override {
    return {kelvin_law("rho")};
  }

  std::map<std::string, double> parameters() const override {
    return {{"c1", eos_.c1}, {"gamma_exp", eos_.gamma_exp}, {"cv", eos_.cv}};
  }

  std::string description() const override {
    return "Compressible flow in momentum form.\n"
           "  state: m (momentum one-form), rho (density), s (specific "
           "entropy)\n"
           "  dm/dt  = -Lie_u m - (div u) m - rho grad(dh/drho) - (dh/ds) "
           "grad s\n"
           "  drho/dt = -div(rho u),  ds/dt = -u . grad s,  u = m/rho\n"
           "  h = Int 1/2 |m|^2/rho + rho e(rho, s);  ideal-gas e.\n"
           "  Kelvin pair: d/dt Oint m/rho = Oint T ds, T = de/ds; uniform "
           "entropy conserves circulation.";
  }

private:
  IdealGasEos eos_;
};

class Mhd final : public HamiltonianFluidModel {
public:
  Mhd(const fields::Grid& g, fields::Scheme scheme, IdealGasEos eos,
      algebra::LieAlgebra alg)
      : HamiltonianFluidModel(alg.id == algebra::AlgebraId::u1 ? "mhd"
                                                              : "ym_mhd",
                              g, scheme, std::move(alg)),
        eos_(eos) {}

  std::string spin_block() const override { return "Q"; }
  std::vector<AdvectedBlock> advected_blocks() const override {
    return {{"rho", AdvectionLaw::density},
            {"s", AdvectionLaw::scalar},
            {"A", AdvectionLaw::connectionAffine}};
  }

  void validate(const State& s) const override {
    require_positive(s.block("rho"), "density");
  }

  FunctionalDerivatives derivatives(const State& s) const override {
    FunctionalDerivatives d;
    d.u = fields::divide_by(s.block("m"), s.block("rho"));
    d.nu = Field(*grid_, alg_.dim); // h carries no Q dependence
    d.advected.push_back(
        density_derivative(*grid_, eos_, s.block("m"), s.block("rho"),
                           s.block("s")));
    d.advected.push_back(
        entropy_derivative(*grid_, eos_, s.block("rho"), s.block("s")));
    d.advected.push_back(
        -1.0 * red_.divergence_twoform(red_.curvature(s.block("A")),
                                       s.block("A")));
    return d;
  }

  double energy(const State& s) const override {
    Field B = red_.curvature(s.block("A"));
    return fluid_energy(*grid_, eos_, s.block("m"), s.block("rho"),
                        s.block("s")) +
           0.5 * fields::integral_scalar(red_.pair_twoform(B, B));
  }

  std::vector<Monitor> monitors() const override {
    auto out = fluid_monitors();
    out.push_back({"magneticEnergy", [this](const State& s) {
                     Field B = red_.curvature(s.block("A"));
                     return 0.5 * fields::integral_scalar(
                                      red_.pair_twoform(B, B));
                   }});
    return out;
  }

  std::vector<CirculationLaw> circulation_laws() const override {
    return {kelvin_law("rho"), connection_circulation_law("A")};
  }

  std::map<std::string, double> parameters() const override {
    return {{"c1", eos_.c1}, {"gamma_exp", eos_.gamma_exp}, {"cv", eos_.cv}};
  }

  std::string description() const override {
    return "Conducting compressible flow with a connection-valued magnetic "
           "potential.\n"
           "  state: m, Q (charge density, fiber-valued), rho, s, A "
           "(potential one-form)\n"
           "  B = curvature(A);  u = m/rho;  dh/dQ = 0\n"
           "  dm/dt = -Lie_u m - (div u) m - rho grad(dh/drho) - (dh/ds) "
           "grad s - dh/dA (diamond) A\n"
           "  dQ/dt = -div(Q u),  dA/dt = -Lie_u A,  dh/dA = -div^A B\n"
           "  h = fluid energy + 1/2 |curvature(A)|^2.\n"
           "  Commutative fiber: classical magnetohydrodynamics with the "
           "Lorentz force curl B x B.\n"
           "  Circulation: d/dt Oint A = 0 along flow loops.";
  }

private:
  IdealGasEos eos_;
};

} // namespace

std::unique_ptr<Model> make_ideal_fluid(const fields::Grid& grid,
                                        fields::Scheme scheme,
                                        IdealGasEos eos) {
  return std::make_unique<IdealFluid>(grid, scheme, eos);
}

std::unique_ptr<Model> make_mhd(const fields::Grid& grid,
                                fields::Scheme scheme, IdealGasEos eos,
                                algebra::LieAlgebra alg) {
  return std::make_unique<Mhd>(grid, scheme, eos, std::move(alg));
}

} // namespace aeplab::models

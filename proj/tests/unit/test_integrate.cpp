#include <doctest.h>

#include <cmath>

#include "aeplab/fields/initial_conditions.hpp"
#include "aeplab/integrate/runner.hpp"
#include "aeplab/reduction/advection.hpp"
#include "test_support.hpp"

using namespace aeplab;
using fields::Field;
using fields::Grid;
using fields::Scheme;
using fields::SpatialOps;
using integrate::BlockSpec;
using integrate::LoopFamily;
using integrate::State;
using integrate::TimeScheme;

namespace {

/// Scalar transported by a constant velocity; energy is (1/2) integral f^2.
class PlaneAdvection : public integrate::System {
public:
  PlaneAdvection(const Grid& g, Eigen::Vector3d c)
      : grid_(g), ops_(g, Scheme::spectral), c_(std::move(c)) {}

  std::string_view name() const override { return "plane-advection"; }
  const Grid& grid() const override { return grid_; }
  const SpatialOps& spatial() const override { return ops_; }
  std::vector<BlockSpec> layout() const override { return {{"f", 1}}; }

  void tangent(const State& s, State& dsdt) const override {
    dsdt.block(0).set_zero();
    for (int ax = 0; ax < grid_.dim; ++ax) {
      Field d = ops_.partial(s.block(0), ax);
      dsdt.block(0).data() -= c_[ax] * d.data();
    }
  }
  double energy(const State& s) const override {
    return 0.5 * fields::l2_norm(s.block(0)) * fields::l2_norm(s.block(0));
  }
  Field velocity(const State&, int) const override {
    Field u(grid_, grid_.dim);
    for (std::size_t node = 0; node < grid_.nodes; ++node)
      for (int ax = 0; ax < grid_.dim; ++ax) u(node, ax) = c_[ax];
    return u;
  }

private:
  Grid grid_;
  SpatialOps ops_;
  Eigen::Vector3d c_;
};

/// Frozen state; only the markers move, through a fixed smooth velocity.
class FrozenFlow : public integrate::System {
public:
  explicit FrozenFlow(const Grid& g)
      : grid_(g), ops_(g, Scheme::spectral), u_(g, g.dim) {
    for (std::size_t node = 0; node < g.nodes; ++node) {
      const Eigen::Vector3d x = g.position(node);
      u_(node, 0) = -std::sin(x[1]);
      u_(node, 1) = std::sin(x[0]);
    }
  }

  std::string_view name() const override { return "frozen-flow"; }
  const Grid& grid() const override { return grid_; }
  const SpatialOps& spatial() const override { return ops_; }
  std::vector<BlockSpec> layout() const override { return {{"f", 1}}; }
  void tangent(const State&, State& dsdt) const override { dsdt.set_zero(); }
  double energy(const State&) const override { return 0.0; }
  Field velocity(const State&, int) const override { return u_; }

private:
  Grid grid_;
  SpatialOps ops_;
  Field u_;
};

/// Tangent is NaN everywhere; the first step must abort.
class PoisonedSystem : public integrate::System {
public:
  explicit PoisonedSystem(const Grid& g)
      : grid_(g), ops_(g, Scheme::spectral) {}
  std::string_view name() const override { return "poisoned"; }
  const Grid& grid() const override { return grid_; }
  const SpatialOps& spatial() const override { return ops_; }
  std::vector<BlockSpec> layout() const override {
    return {{"good", 1}, {"bad", 2}};
  }
  void tangent(const State&, State& dsdt) const override {
    dsdt.block(0).set_zero();
    dsdt.block(1).data().setConstant(std::nan(""));
  }
  double energy(const State&) const override { return 0.0; }
  Field velocity(const State&, int) const override {
    return Field(grid_, grid_.dim);
  }

private:
  Grid grid_;
  SpatialOps ops_;
};

double advection_error(const PlaneAdvection& sys, TimeScheme scheme,
                       double dt, double t_end, double c) {
  State s(sys.grid(), sys.layout());
  for (std::size_t node = 0; node < sys.grid().nodes; ++node)
    s.block(0)(node) = std::sin(sys.grid().position(node)[0]);
  integrate::IntegratorConfig cfg;
  cfg.scheme = scheme;
  cfg.dt = dt;
  cfg.t_end = t_end;
  std::vector<LoopFamily> none;
  run(sys, cfg, s, none);
  double worst = 0.0;
  for (std::size_t node = 0; node < sys.grid().nodes; ++node) {
    const double exact =
        std::sin(sys.grid().position(node)[0] - c * t_end);
    worst = std::max(worst, std::abs(s.block(0)(node) - exact));
  }
  return worst;
}

} // namespace

TEST_CASE("state blocks are addressable and support stepper arithmetic") {
  Grid g = Grid::line(16);
  State s(g, {{"rho", 1}, {"m", 1}});
  CHECK(s.nblocks() == 2);
  CHECK(s.find("rho") == 0);
  CHECK(s.find("kappa") == -1);
  CHECK(s.has("m"));
  s.block("rho").data().setConstant(2.0);
  State o = s;
  o *= 0.5;
  s.add_scaled(o, 3.0);
  CHECK(s.block("rho")(0) == doctest::Approx(5.0));
  CHECK(s.first_nonfinite().empty());
  s.block("m")(3) = std::nan("");
  CHECK(s.first_nonfinite() == "m");
}

TEST_CASE("plane wave advection converges at the nominal order") {
  Grid g = Grid::line(32);
  const double c = 1.0;
  PlaneAdvection sys(g, {c, 0.0, 0.0});

  SUBCASE("rk4") {
    const double e1 = advection_error(sys, TimeScheme::rk4, 0.05, 1.0, c);
    const double e2 = advection_error(sys, TimeScheme::rk4, 0.025, 1.0, c);
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(4.0).epsilon(0.3 / 4.0));
  }
  SUBCASE("ssprk3") {
    const double e1 = advection_error(sys, TimeScheme::ssprk3, 0.05, 1.0, c);
    const double e2 = advection_error(sys, TimeScheme::ssprk3, 0.025, 1.0, c);
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(3.0).epsilon(0.3 / 3.0));
  }
}

TEST_CASE("advection conserves the quadratic invariant to time error") {
  Grid g = Grid::line(32);
  PlaneAdvection sys(g, {1.0, 0.0, 0.0});
  State s(g, sys.layout());
  for (std::size_t node = 0; node < g.nodes; ++node)
    s.block(0)(node) = std::sin(g.position(node)[0]);
  const double e0 = sys.energy(s);
  integrate::IntegratorConfig cfg;
  cfg.dt = 1e-2;
  cfg.t_end = 1.0;
  std::vector<LoopFamily> none;
  run(sys, cfg, s, none);
  CHECK(std::abs(sys.energy(s) - e0) <= 1e-9 * (1.0 + std::abs(e0)));
}

TEST_CASE("two runs from the same state agree bitwise") {
  Grid g = Grid::square(16);
  FrozenFlow flow(g);
  PlaneAdvection sys(g, {0.7, -0.3, 0.0});

  auto once = [&](const integrate::System& sy) {
    State s(g, sy.layout());
    auto r = testsupport::rng(7);
    fields::fill_random_smooth(s.block(0), r, 3, 0.5);
    std::vector<LoopFamily> fams{
        {"loops", 0, {reduction::circle_loop({3.0, 3.0, 0.0}, 1.0, 16)}}};
    integrate::IntegratorConfig cfg;
    cfg.dt = 1e-2;
    cfg.t_end = 0.2;
    run(sy, cfg, s, fams);
    return std::pair{s, fams};
  };
  auto [s1, f1] = once(sys);
  auto [s2, f2] = once(sys);
  CHECK((s1.block(0).data() == s2.block(0).data()).all());
  for (std::size_t k = 0; k < f1[0].loops[0].x.size(); ++k)
    CHECK(f1[0].loops[0].x[k] == f2[0].loops[0].x[k]);

  auto [s3, f3] = once(flow);
  auto [s4, f4] = once(flow);
  for (std::size_t k = 0; k < f3[0].loops[0].x.size(); ++k)
    CHECK(f3[0].loops[0].x[k] == f4[0].loops[0].x[k]);
}

TEST_CASE("a split run reproduces a single run bitwise") {
  Grid g = Grid::line(32);
  PlaneAdvection sys(g, {1.0, 0.0, 0.0});
  auto init = [&] {
    State s(g, sys.layout());
    auto r = testsupport::rng(11);
    fields::fill_random_smooth(s.block(0), r, 4, 0.5);
    return s;
  };
  std::vector<LoopFamily> none;
  integrate::IntegratorConfig whole;
  whole.dt = 1e-2;
  whole.t_end = 1.0;
  State a = init();
  run(sys, whole, a, none);

  integrate::IntegratorConfig half = whole;
  half.t_end = 0.5;
  State b = init();
  run(sys, half, b, none);
  run(sys, half, b, none);
  CHECK((a.block(0).data() == b.block(0).data()).all());
}

TEST_CASE("markers in a constant velocity translate exactly") {
  Grid g = Grid::square(16);
  PlaneAdvection sys(g, {0.5, -0.25, 0.0});
  State s(g, sys.layout());
  std::vector<LoopFamily> fams{
      {"loops", 0, {reduction::circle_loop({3.0, 3.0, 0.0}, 1.0, 12)}}};
  const std::vector<Eigen::Vector3d> x0 = fams[0].loops[0].x;
  for (TimeScheme scheme : {TimeScheme::rk4, TimeScheme::ssprk3}) {
    fams[0].loops[0].x = x0;
    integrate::IntegratorConfig cfg;
    cfg.scheme = scheme;
    cfg.dt = 0.05;
    cfg.t_end = 1.0;
    State s0 = s;
    run(sys, cfg, s0, fams);
    for (std::size_t k = 0; k < x0.size(); ++k) {
      const Eigen::Vector3d expect = x0[k] + Eigen::Vector3d(0.5, -0.25, 0.0);
      CHECK((fams[0].loops[0].x[k] - expect).norm() <= 1e-12);
    }
  }
}

TEST_CASE("marker trajectories converge at the scheme order") {
  Grid g = Grid::square(32);
  FrozenFlow sys(g);
  auto endpoint = [&](TimeScheme scheme, double dt) {
    State s(g, sys.layout());
    std::vector<LoopFamily> fams{
        {"loops", 0, {reduction::circle_loop({2.5, 3.5, 0.0}, 0.8, 8)}}};
    integrate::IntegratorConfig cfg;
    cfg.scheme = scheme;
    cfg.dt = dt;
    cfg.t_end = 1.0;
    run(sys, cfg, s, fams);
    return fams[0].loops[0].x;
  };
  auto gap = [&](TimeScheme scheme, double dt) {
    auto xa = endpoint(scheme, dt);
    auto xb = endpoint(scheme, dt / 2);
    double worst = 0.0;
    for (std::size_t k = 0; k < xa.size(); ++k)
      worst = std::max(worst, (xa[k] - xb[k]).norm());
    return worst;
  };
  const double r4 = std::log2(gap(TimeScheme::rk4, 0.1) /
                              gap(TimeScheme::rk4, 0.05));
  CHECK(r4 == doctest::Approx(4.0).epsilon(0.3 / 4.0));
  const double r3 = std::log2(gap(TimeScheme::ssprk3, 0.1) /
                              gap(TimeScheme::ssprk3, 0.05));
  CHECK(r3 == doctest::Approx(3.0).epsilon(0.3 / 3.0));
}

TEST_CASE("a non-finite step aborts with the failing block and rollback") {
  Grid g = Grid::line(16);
  PoisonedSystem sys(g);
  State s(g, sys.layout());
  s.block("good").data().setConstant(1.5);
  std::vector<LoopFamily> none;
  integrate::IntegratorConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 1.0;
  try {
    run(sys, cfg, s, none);
    FAIL("expected SimulationError");
  } catch (const integrate::SimulationError& e) {
    CHECK(e.step == 1);
    CHECK(e.t == doctest::Approx(0.1));
    CHECK(e.block == "bad");
  }
  // rolled back to the initial condition
  CHECK(s.first_nonfinite().empty());
  CHECK(s.block("good")(0) == doctest::Approx(1.5));
}

TEST_CASE("runner cadences fire on schedule") {
  Grid g = Grid::line(16);
  PlaneAdvection sys(g, {1.0, 0.0, 0.0});
  State s(g, sys.layout());
  std::vector<LoopFamily> none;
  integrate::IntegratorConfig cfg;
  cfg.dt = 0.1;
  cfg.t_end = 1.0;
  cfg.diagnostic_every = 3;
  cfg.snapshot_every = 4;
  std::vector<int> diag, snap;
  integrate::RunCallbacks cb;
  cb.on_diagnostic = [&](int k, double, const State&,
                         const std::vector<LoopFamily>&) {
    diag.push_back(k);
  };
  cb.on_snapshot = [&](int k, double, const State&,
                       const std::vector<LoopFamily>&) { snap.push_back(k); };
  const int steps = run(sys, cfg, s, none, cb);
  CHECK(steps == 10);
  CHECK(diag == std::vector<int>{0, 3, 6, 9, 10});
  CHECK(snap == std::vector<int>{0, 4, 8, 10});
}

TEST_CASE("closed loop integrals match classical values") {
  Grid g = Grid::square(32);
  SpatialOps ops(g, Scheme::spectral);

  reduction::Loop loop = reduction::circle_loop(
      {Grid::two_pi() / 2, Grid::two_pi() / 2, 0.0}, 1.0, 64);
  CHECK(loop.x.size() == 64);

  SUBCASE("gradient fields have zero circulation") {
    Field phi(g, 1);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      const Eigen::Vector3d x = g.position(node);
      phi(node) = std::sin(x[0]) * std::cos(x[1]);
    }
    const Field dphi = ops.grad(phi);
    CHECK(std::abs(loop_integral_oneform(
              ops, dphi, loop, reduction::MarkerSampling::spectral)) <= 1e-10);
    CHECK(std::abs(loop_integral_oneform(
              ops, dphi, loop, reduction::MarkerSampling::linear)) <= 5e-2);
  }

  SUBCASE("sin(x) dy around a unit circle is a bessel integral") {
    Field f(g, 2);
    for (std::size_t node = 0; node < g.nodes; ++node)
      f(node, 1) = std::sin(g.position(node)[0]);
    const double got = loop_integral_oneform(
        ops, f, loop, reduction::MarkerSampling::spectral);
    const double expect = -Grid::two_pi() * std::cyl_bessel_j(1, 1.0);
    CHECK(got == doctest::Approx(expect).epsilon(1e-10));
  }

  SUBCASE("algebra valued loop integrals act blockwise") {
    Field gamma(g, 2 * g.dim);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      gamma(node, 1) = std::sin(g.position(node)[0]); // block 0, dy
      gamma(node, 2) = 2.0 * std::sin(g.position(node)[0]); // block 1, dx
      gamma(node, 3) = 2.0 * std::sin(g.position(node)[0]); // block 1, dy
    }
    const Eigen::VectorXd per = loop_integral_blocks(
        ops, gamma, loop, reduction::MarkerSampling::spectral);
    CHECK(per.size() == 2);
    // the dx leg of block 1 integrates to zero by symmetry
    CHECK(per[1] == doctest::Approx(2.0 * per[0]).epsilon(1e-9));
  }
}

TEST_CASE("the advection dispatcher reproduces each transport formula") {
  Grid g = Grid::square(16);
  SpatialOps ops(g, Scheme::spectral);
  algebra::LieAlgebra so3 = algebra::LieAlgebra::so3();
  reduction::ReductionOps red(so3, ops);
  auto mk = [&](int ncomp, std::uint64_t seed) {
    Field f(g, ncomp);
    auto r = testsupport::rng(seed);
    fields::fill_random_smooth(f, r, 2, 0.7);
    return f;
  };
  const Field u = mk(g.dim, 11);
  const Field nu3 = mk(3, 23);
  const Field nu1 = mk(1, 29);

  using reduction::AdvectionLaw;
  using reduction::advection_tangent;

  SUBCASE("density and scalar") {
    const Field rho = mk(1, 31);
    Field want = red.transport_divergence(u, rho);
    want *= -1.0;
    const Field got = advection_tangent(red, AdvectionLaw::density, rho, &u,
                                        nullptr);
    CHECK(fields::max_abs(got - want) == 0.0);
    Field wants = red.directional(u, rho);
    wants *= -1.0;
    const Field gots = advection_tangent(red, AdvectionLaw::scalar, rho, &u,
                                         nullptr);
    CHECK(fields::max_abs(gots - wants) == 0.0);
  }

  SUBCASE("matrix conjugation accepts algebra or matrix coordinates") {
    const Field i9 = mk(9, 37);
    Field nu9(g, 9);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      const Eigen::Matrix3d m =
          so3.to_matrix(Eigen::Vector3d(nu3(node, 0), nu3(node, 1),
                                        nu3(node, 2)));
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) nu9(node, 3 * r + c) = m(r, c);
    }
    Field want = red.advect_matrix(u, nu9, i9);
    want *= -1.0;
    const Field got_m = advection_tangent(
        red, AdvectionLaw::symTensorConjugation, i9, &u, &nu9);
    const Field got_a = advection_tangent(
        red, AdvectionLaw::symTensorConjugation, i9, &u, &nu3);
    CHECK(fields::max_abs(got_m - want) == 0.0);
    CHECK(fields::max_abs(got_a - want) <= 1e-14);
  }

  SUBCASE("connection transport includes both velocity legs") {
    const Field gamma = mk(3 * g.dim, 41);
    Field want = red.lie_connection(u, gamma);
    want += red.covariant_differential(nu3, gamma);
    want *= -1.0;
    const Field got = advection_tangent(red, AdvectionLaw::connectionAffine,
                                        gamma, &u, &nu3);
    CHECK(fields::max_abs(got - want) == 0.0);
    const Field frozen = advection_tangent(
        red, AdvectionLaw::connectionAffine, gamma, nullptr, &nu3);
    Field want_frozen = red.covariant_differential(nu3, gamma);
    want_frozen *= -1.0;
    CHECK(fields::max_abs(frozen - want_frozen) == 0.0);
  }

  SUBCASE("director transport") {
    const Field n = mk(3, 43);
    Field want = red.advect_director(u, nu3, n);
    want *= -1.0;
    const Field got = advection_tangent(red, AdvectionLaw::directorLinear, n,
                                        &u, &nu3);
    CHECK(fields::max_abs(got - want) == 0.0);
  }

  SUBCASE("one form transport with a scalar potential") {
    const Field v = mk(g.dim, 47);
    Field want = red.lie_oneform(u, v);
    want += ops.grad(nu1);
    want *= -1.0;
    const Field got = advection_tangent(
        red, AdvectionLaw::velocityOneFormAffine, v, &u, &nu1);
    CHECK(fields::max_abs(got - want) == 0.0);
  }

  SUBCASE("law names round trip") {
    for (auto law :
         {AdvectionLaw::density, AdvectionLaw::scalar,
          AdvectionLaw::symTensorConjugation, AdvectionLaw::connectionAffine,
          AdvectionLaw::directorLinear, AdvectionLaw::velocityOneFormAffine})
      CHECK(reduction::advection_law_from_string(
                std::string(reduction::to_string(law))) == law);
  }
}

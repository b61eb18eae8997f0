#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "aeplab/fields/initial_conditions.hpp"
#include "aeplab/fields/pointwise.hpp"
#include "aeplab/models/spin.hpp"
#include "aeplab/reduction/loops.hpp"
#include "model_test_utils.hpp"

using namespace aeplab;
using namespace aeplab::fields;
using namespace aeplab::models;
using integrate::State;

namespace {

/// gamma_i = -(d_i chi) chi^{-1} for chi built from two rotation angles:
/// an exactly flat connection up to the spectral tail of the composition.
Field pure_gauge_connection(const Grid& g, const SpatialOps& ops,
                            std::uint64_t seed, double amp) {
  Field f = modeltest::smooth_field(g, 2, seed, 1, amp);
  Field chi(g, 9);
  for (std::size_t node = 0; node < g.nodes; ++node) {
    Eigen::Matrix3d m =
        (Eigen::AngleAxisd(f(node, 0), Eigen::Vector3d::UnitX()) *
         Eigen::AngleAxisd(f(node, 1), Eigen::Vector3d::UnitY()))
            .toRotationMatrix();
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) chi(node, 3 * r + c) = m(r, c);
  }
  Field gamma(g, 3 * g.dim);
  for (int i = 0; i < g.dim; ++i) {
    Field dchi = ops.partial(chi, i);
    for (std::size_t node = 0; node < g.nodes; ++node) {
      Eigen::Matrix3d m, dm;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          m(r, c) = chi(node, 3 * r + c);
          dm(r, c) = dchi(node, 3 * r + c);
        }
      Eigen::Vector3d v = algebra::unhat(dm * m.transpose());
      for (int a = 0; a < 3; ++a) gamma(node, a * g.dim + i) = -v[a];
    }
  }
  return gamma;
}

double curvature_norm(const Model& mdl, const State& s) {
  for (const Monitor& m : mdl.monitors())
    if (m.name == "curvatureNorm") return m.eval(s);
  FAIL("curvatureNorm monitor missing");
  return 0.0;
}

} // namespace

TEST_CASE("spin system rejects nonpositive constants") {
  Grid g = Grid::line(32);
  auto alg = algebra::LieAlgebra::so3();
  CHECK_THROWS_AS(make_spin_system(g, Scheme::spectral, alg, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_spin_system(g, Scheme::spectral, alg, 1.0, -2.0),
                  std::invalid_argument);
}

TEST_CASE("spin system layout has no fluid part") {
  Grid g = Grid::square(16);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 0.5, 2.0);
  CHECK(mdl->name() == "spin_system");
  auto lay = mdl->layout();
  REQUIRE(lay.size() == 2);
  CHECK(lay[0].name == "kappa");
  CHECK(lay[0].ncomp == 3);
  CHECK(lay[1].name == "gamma");
  CHECK(lay[1].ncomp == 6);

  State s = modeltest::random_state(*mdl, 11, 0.4);
  Field v = mdl->velocity(s, 0);
  CHECK(v.ncomp() == g.dim);
  CHECK(max_abs(v) == 0.0);
}

TEST_CASE("spin tangent matches the precession equations") {
  Grid g = Grid::square(24);
  const double eps = 0.5, rigidity = 2.0;
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), eps, rigidity);
  const auto& hm = dynamic_cast<const HamiltonianFluidModel&>(*mdl);
  const auto& red = hm.reduction();

  State s = modeltest::random_state(*mdl, 21, 0.4, 3);
  State dsdt = mdl->make_state();
  mdl->tangent(s, dsdt);

  Field nu = (1.0 / eps) * s.block("kappa");
  Field kdot = -1.0 * red.ad_star(nu, s.block("kappa")) -
               red.covariant_divergence(rigidity * s.block("gamma"),
                                        s.block("gamma"));
  Field gdot = -1.0 * red.covariant_differential(nu, s.block("gamma"));
  mdl->spatial().dealias(kdot);
  mdl->spatial().dealias(gdot);
  CHECK(l2_norm(dsdt.block("kappa") - kdot) <= 1e-12 * (1.0 + l2_norm(kdot)));
  CHECK(l2_norm(dsdt.block("gamma") - gdot) <= 1e-12 * (1.0 + l2_norm(gdot)));
}

TEST_CASE("spin functional derivatives are the gradient of the energy") {
  Grid g = Grid::square(16);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 0.7, 1.3);
  const auto& hm = dynamic_cast<const HamiltonianFluidModel&>(*mdl);
  State s = modeltest::random_state(*mdl, 31, 0.4);
  State ds = modeltest::random_state(*mdl, 32, 0.5, 3);
  const double pairing = modeltest::energy_rate(hm, s, ds);
  const double fd = modeltest::fd_energy_directional(*mdl, s, ds, 1e-2);
  CHECK(std::abs(pairing - fd) <= 1e-9 * (1.0 + std::abs(fd)));
}

TEST_CASE("spin tangent conserves energy semidiscretely") {
  Grid g = Grid::square(24);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 0.5, 2.0);
  const auto& hm = dynamic_cast<const HamiltonianFluidModel&>(*mdl);
  State s = modeltest::random_state(*mdl, 41, 0.5);
  State dsdt = mdl->make_state();
  mdl->tangent(s, dsdt);
  const double rate = modeltest::energy_rate(hm, s, dsdt);
  CHECK(std::abs(rate) <= 1e-11 * (1.0 + std::abs(mdl->energy(s))));
}

TEST_CASE("quadratic Legendre transform reproduces the Hamiltonian") {
  Grid g = Grid::line(48);
  const double eps = 0.8, rigidity = 1.7;
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), eps, rigidity);
  const auto& red = dynamic_cast<const HamiltonianFluidModel&>(*mdl)
                        .reduction();

  Field nu = modeltest::smooth_field(g, 3, 51, 3, 0.6);
  Field gamma = modeltest::smooth_field(g, 3 * g.dim, 52, 3, 0.6);
  auto l = spin_lagrangian(red, SpinLagrangian::quadratic, nu, gamma, eps,
                           rigidity);
  CHECK(max_abs(l.dl_dnu - eps * nu) == 0.0);

  State s = mdl->make_state();
  s.block("kappa") = eps * nu; // kappa = dl/dnu
  s.block("gamma") = gamma;
  const double h = integral_scalar(red.pair(s.block("kappa"), nu)) - l.value;
  CHECK(std::abs(h - mdl->energy(s)) <= 1e-12 * (1.0 + std::abs(h)));
}

TEST_CASE("degenerate Lagrangians evaluate but refuse to integrate") {
  Grid g = Grid::line(32);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 1.0, 1.0,
                              SpinLagrangian::perpendicular);
  CHECK(mdl->parameters().at("lagrangian") ==
        static_cast<double>(SpinLagrangian::perpendicular));
  State s = modeltest::random_state(*mdl, 61, 0.4);
  State dsdt = mdl->make_state();
  CHECK_THROWS_AS(mdl->tangent(s, dsdt), ModelError);
  CHECK_THROWS_AS(mdl->energy(s), ModelError);
}

TEST_CASE("degenerate Lagrangian derivatives are the gradient of their value") {
  Grid g = Grid::square(12);
  SpatialOps ops(g, Scheme::spectral);
  auto alg = algebra::LieAlgebra::so3();
  reduction::ReductionOps red(alg, ops);
  const int G = alg.dim, d = g.dim;

  for (auto which :
       {SpinLagrangian::perpendicular, SpinLagrangian::parallel}) {
    CAPTURE(static_cast<int>(which));
    Field nu = modeltest::smooth_field(g, G, 71, 2, 0.6);
    Field gamma = modeltest::smooth_field(g, G * d, 72, 2, 0.6);
    Field dnu = modeltest::smooth_field(g, G, 73, 2, 0.7);
    Field dgamma = modeltest::smooth_field(g, G * d, 74, 2, 0.7);

    auto at = [&](double a) {
      return spin_lagrangian(red, which, nu + a * dnu, gamma + a * dgamma,
                             1.0, 1.0)
          .value;
    };
    const double h = 1e-2;
    const double fd =
        (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);

    auto der = spin_lagrangian(red, which, nu, gamma, 1.0, 1.0);
    const double pairing =
        integral_scalar(red.pair(der.dl_dnu, dnu)) +
        integral_scalar(red.pair_oneform(der.dl_dgamma, dgamma));
    CHECK(std::abs(pairing - fd) <= 1e-8 * (1.0 + std::abs(fd)));
    CHECK(der.value > 0.0);
  }
}

TEST_CASE("degenerate Lagrangians satisfy the divergence simplification") {
  // -ad*_nu(dl/dnu) = div(dl/dgamma) - div^gamma(dl/dgamma) pointwise, so
  // the fiber momentum equation closes with a plain divergence.
  Grid g = Grid::square(12);
  SpatialOps ops(g, Scheme::spectral);
  auto alg = algebra::LieAlgebra::so3();
  REQUIRE(alg.pairing_ad_invariant);
  reduction::ReductionOps red(alg, ops);
  const int G = alg.dim, d = g.dim;

  for (auto which :
       {SpinLagrangian::perpendicular, SpinLagrangian::parallel}) {
    CAPTURE(static_cast<int>(which));
    Field nu = modeltest::smooth_field(g, G, 81, 2, 0.7);
    Field gamma = modeltest::smooth_field(g, G * d, 82, 2, 0.7);
    auto der = spin_lagrangian(red, which, nu, gamma, 1.0, 1.0);

    Field residual = red.ad_star(nu, der.dl_dnu) +
                     ops.divergence(der.dl_dgamma) -
                     red.covariant_divergence(der.dl_dgamma, gamma);
    const double scale = max_abs(der.dl_dnu) + max_abs(der.dl_dgamma);
    CHECK(max_abs(residual) <= 1e-12 * (1.0 + scale));
  }
}

TEST_CASE("flat connections stay flat along the flow") {
  Grid g = Grid::square(32);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 0.8, 1.5);
  State s = mdl->make_state();
  s.block("gamma") = pure_gauge_connection(g, mdl->spatial(), 91, 0.35);
  auto r = testsupport::rng(92);
  for (int c = 0; c < 3; ++c)
    add_random_band(s.block("kappa"), c, r, 1, 2, 0.15);

  const double b0 = curvature_norm(*mdl, s);
  CHECK(b0 <= 1e-8);
  const double dt = 2e-3;
  for (int k = 0; k < 500; ++k)
    integrate::step(*mdl, integrate::TimeScheme::rk4, dt, s, nullptr);
  CHECK(curvature_norm(*mdl, s) <= 1e-7);
}

TEST_CASE("spin energy drift shrinks at fourth order in the time step") {
  Grid g = Grid::line(64);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 0.5, 2.0);
  State s = modeltest::random_state(*mdl, 101, 1.0);

  const double t_end = 0.5;
  const double d1 = modeltest::relative_energy_drift(*mdl, s, 4e-3, t_end);
  const double d2 = modeltest::relative_energy_drift(*mdl, s, 2e-3, t_end);
  CAPTURE(d1);
  CAPTURE(d2);
  CHECK(d1 <= 1e-5);
  CHECK(d2 <= 1e-6);
  CHECK(d1 / d2 >= 12.0);
}

TEST_CASE("static loop circulation rate matches the connection tangent") {
  // No fluid part: loops do not move, and d/dt oint gamma = oint dgamma/dt.
  Grid g = Grid::square(24);
  auto mdl = make_spin_system(g, Scheme::spectral,
                              algebra::LieAlgebra::so3(), 0.6, 1.2);
  State s = modeltest::random_state(*mdl, 111, 0.4);
  auto laws = mdl->circulation_laws();
  REQUIRE(laws.size() == 1);
  CHECK(laws[0].name == "gamma_circulation");

  reduction::Loop loop = reduction::circle_loop({3.1, 2.9, 0.0}, 0.8, 48);
  auto circ = [&](const Field& f) {
    return reduction::loop_integral_blocks(
        mdl->spatial(), f, loop, reduction::MarkerSampling::spectral);
  };

  const double dt = 1e-3;
  Eigen::VectorXd c0 = circ(laws[0].lhs_form(s));
  integrate::step(*mdl, integrate::TimeScheme::rk4, dt, s, nullptr);
  Eigen::VectorXd rhs = circ(laws[0].rhs_form(s));
  integrate::step(*mdl, integrate::TimeScheme::rk4, dt, s, nullptr);
  Eigen::VectorXd c2 = circ(laws[0].lhs_form(s));

  Eigen::VectorXd fd_rate = (c2 - c0) / (2.0 * dt);
  CHECK((fd_rate - rhs).cwiseAbs().maxCoeff() <=
        1e-6 + 1e-3 * rhs.cwiseAbs().maxCoeff());
}

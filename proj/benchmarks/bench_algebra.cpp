#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "aeplab/algebra/lie_algebra.hpp"

using namespace aeplab::algebra;

namespace {

std::vector<double> random_coords(int n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(g);
  return v;
}

void bench_bracket(benchmark::State& state, const LieAlgebra& alg) {
  auto a = random_coords(alg.dim, 1), b = random_coords(alg.dim, 2);
  std::vector<double> out(alg.dim);
  for (auto _ : state) {
    alg.bracket_span(a.data(), b.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
}

void bench_ad_star(benchmark::State& state, const LieAlgebra& alg) {
  auto xi = random_coords(alg.dim, 3), mu = random_coords(alg.dim, 4);
  std::vector<double> out(alg.dim);
  for (auto _ : state) {
    alg.ad_star_span(xi.data(), mu.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
}

} // namespace

int main(int argc, char** argv) {
  auto so3 = LieAlgebra::so3();
  auto cso3 = LieAlgebra::cso3();
  auto gl3 = LieAlgebra::gl3();
  benchmark::RegisterBenchmark("bracket/so3", bench_bracket, so3);
  benchmark::RegisterBenchmark("bracket/cso3", bench_bracket, cso3);
  benchmark::RegisterBenchmark("bracket/gl3", bench_bracket, gl3);
  benchmark::RegisterBenchmark("ad_star/so3", bench_ad_star, so3);
  benchmark::RegisterBenchmark("ad_star/cso3", bench_ad_star, cso3);
  benchmark::RegisterBenchmark("ad_star/gl3", bench_ad_star, gl3);
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}

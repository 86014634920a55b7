#include <benchmark/benchmark.h>

#include <random>

#include "monopole/angular.hpp"
#include "monopole/classical.hpp"
#include "monopole/clifford.hpp"
#include "monopole/nonlinear.hpp"

namespace cf = monopole::clifford;
namespace cl = monopole::classical;
namespace an = monopole::angular;
namespace nl = monopole::nonlinear;
using monopole::potentials::Vec3;

static void BM_Bilinears(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 1.0);
  cf::Spinor4 psi;
  for (int i = 0; i < 4; ++i) psi(i) = cf::cplx(g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(cf::bilinears(psi));
}
BENCHMARK(BM_Bilinears);

static void BM_WignerD(benchmark::State& state) {
  const int two_j = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int two_m = -two_j; two_m <= two_j; two_m += 2)
      benchmark::DoNotOptimize(an::wigner_d(two_j, two_j % 2, two_m, 1.1));
}
BENCHMARK(BM_WignerD)->Arg(2)->Arg(8)->Arg(16);

static void BM_Trajectory(benchmark::State& state) {
  cl::TrajectoryState s;
  s.r = Vec3(1, 0, 0);
  s.v = Vec3(0, 1, 0.3);
  cl::PoincareParams p;
  p.lambda = 0.5;
  for (auto _ : state)
    benchmark::DoNotOptimize(cl::integrate_trajectory(s, p, 10.0));
}
BENCHMARK(BM_Trajectory);

static void BM_DispersionSolve(benchmark::State& state) {
  const Vec3 k(0, 0, 1.7);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        nl::dispersion_solve(k, nl::DispersionMode::co_phase, 0.8));
}
BENCHMARK(BM_DispersionSolve);

static void BM_MonopoleHarmonic(benchmark::State& state) {
  const auto grid = an::ThetaGrid::gauss(48);
  for (auto _ : state)
    benchmark::DoNotOptimize(an::monopole_harmonic(grid, 8, 2, -4));
}
BENCHMARK(BM_MonopoleHarmonic);

BENCHMARK_MAIN();

#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "cpvortex/cpvortex.hpp"

namespace {

using C = std::complex<double>;

const cpv::FlagCoords kFlag{C(0.7, 0.2), C(-0.4, 0.5), C(0.3, -0.6)};

cpv::VortexSystem cp2_triple() {
  cpv::ComplexVector a(3), b(3), c(3);
  a << C(1.0, 0.0), C(0.2, 0.1), C(-0.3, 0.4);
  b << C(0.1, -0.5), C(1.0, 0.0), C(0.4, 0.2);
  c << C(-0.2, 0.3), C(0.5, -0.1), C(1.0, 0.0);
  return cpv::VortexSystem::projective(
      {cpv::ProjectivePoint(a), cpv::ProjectivePoint(b), cpv::ProjectivePoint(c)}, {1.0, 0.7, -1.2});
}

void BM_VectorField(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpv::infinitesimal_vf(k, kFlag));
}
BENCHMARK(BM_VectorField)->DenseRange(1, 8);

void BM_BruhatNormalize(benchmark::State& state) {
  const cpv::Matrix3c g = cpv::exp_su3(4, 0.8).entries() * kFlag.unitriangular();
  for (auto _ : state) benchmark::DoNotOptimize(cpv::bruhat_normalize(g));
}
BENCHMARK(BM_BruhatNormalize);

void BM_MomentumFlag(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cpv::momentum_flag(kFlag));
}
BENCHMARK(BM_MomentumFlag);

void BM_GreensCpn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cpv::greens_cpn(n, 0.7));
}
BENCHMARK(BM_GreensCpn)->Arg(1)->Arg(2)->Arg(4);

void BM_GreensOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cpv::greens_ode_oracle(4, 0.05, 1.2));
}
BENCHMARK(BM_GreensOracle);

void BM_Rk4StepCp2(benchmark::State& state) {
  const cpv::VortexSystem s = cp2_triple();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpv::integrate(s, 1e-3, 1, cpv::Integrator::rk4));
  }
}
BENCHMARK(BM_Rk4StepCp2);

void BM_Rk4StepPlane(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  std::vector<C> pos;
  std::vector<double> strengths;
  for (int a = 0; a < count; ++a) {
    pos.push_back(std::polar(1.0 + 0.1 * a, 0.7 * a));
    strengths.push_back(1.0 + 0.01 * a);
  }
  const cpv::VortexSystem s = cpv::VortexSystem::planar(pos, strengths);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpv::integrate(s, 1e-3, 1, cpv::Integrator::rk4));
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_Rk4StepPlane)->RangeMultiplier(4)->Range(4, 256)->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();

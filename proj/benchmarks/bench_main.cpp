#include <benchmark/benchmark.h>

#include <cmath>

#include "qbargmann/coherent.hpp"
#include "qbargmann/measure.hpp"
#include "qbargmann/qcore.hpp"
#include "qbargmann/transform.hpp"

using namespace qbargmann;

namespace {

void BM_QpochInfinite(benchmark::State& state) {
  const DeformationParameter q(static_cast<double>(state.range(0)) / 100.0);
  const Complex a(0.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_infinite(a, q));
}
BENCHMARK(BM_QpochInfinite)->Arg(30)->Arg(80)->Arg(99);

void BM_Omega(benchmark::State& state) {
  const DeformationParameter q(static_cast<double>(state.range(0)) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(omega(0.7, q));
}
BENCHMARK(BM_Omega)->Arg(30)->Arg(80)->Arg(99);

void BM_QuadIq(benchmark::State& state) {
  const DeformationParameter q(0.5);
  const RealFunction f = [q](double xi) { return Complex(phi_q(2, xi, q) * phi_q(2, xi, q)); };
  for (auto _ : state) benchmark::DoNotOptimize(quad_Iq(f, q));
}
BENCHMARK(BM_QuadIq);

void BM_BargmannQ(benchmark::State& state) {
  const DeformationParameter q(0.5);
  const int m = static_cast<int>(state.range(0));
  const SampledSignal f = SampledSignal::from_function([q](double xi) { return Complex(phi_q(1, xi, q)); });
  const Complex z = std::polar(0.3 * std::sqrt(q.pow(m)), 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(bargmann_q(f, m, q, z));
}
BENCHMARK(BM_BargmannQ)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gboson/bipartite.hpp"
#include "gboson/dualalg.hpp"
#include "gboson/duality.hpp"
#include "gboson/qspecial.hpp"
#include "gboson/ualg.hpp"

using namespace gboson;

namespace {

const DeformationParams kP(1.3, 2.0, 1.0);

void BM_DeformedExp(benchmark::State& state) {
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(deformed_exp(x, kP));
    x = x > 3.0 ? -3.0 : x + 0.01;
  }
}
BENCHMARK(BM_DeformedExp);

void BM_BosonCoproduct(benchmark::State& state) {
  const BosonAlgebra U(kP);
  const int k = static_cast<int>(state.range(0));
  const UElement e = U.basis_E(k, 1, k);
  for (auto _ : state) benchmark::DoNotOptimize(U.coproduct(e));
}
BENCHMARK(BM_BosonCoproduct)->DenseRange(1, 3);

void BM_DualHomomorphism(benchmark::State& state) {
  const DualAlgebra F(kP);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(F.homomorphism_check(order));
}
BENCHMARK(BM_DualHomomorphism)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_PairingOrthonormality(benchmark::State& state) {
  const Duality d(kP);
  const int max_index = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d.pairing_orthonormality(max_index));
}
BENCHMARK(BM_PairingOrthonormality)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GroupLike(benchmark::State& state) {
  const Duality d(kP);
  for (auto _ : state) benchmark::DoNotOptimize(d.grouplike_check(6, 6, 3));
}
BENCHMARK(BM_GroupLike)->Unit(benchmark::kMillisecond);

void BM_BipartiteState(benchmark::State& state) {
  const BipartiteParams bp;
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const BipartiteState s = assemble_state(bp, kP, dim, true);
    benchmark::DoNotOptimize(schmidt_entropy(s.coefficients));
  }
}
BENCHMARK(BM_BipartiteState)->RangeMultiplier(2)->Range(8, 32);

}  // namespace
BENCHMARK_MAIN();

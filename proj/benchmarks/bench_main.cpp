#include <benchmark/benchmark.h>

#include "suppcode/autgroup.hpp"
#include "suppcode/construct.hpp"
#include "suppcode/coset.hpp"
#include "suppcode/report.hpp"

using namespace suppcode;

namespace {

void BM_CosetBfs(benchmark::State& state) {
  const SupplementaryPair pair =
      make_preset("buM", static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                  1);
  for (auto _ : state) {
    CosetTable t = coset_weights(pair.pcm_b);
    benchmark::DoNotOptimize(t.rho);
  }
}
BENCHMARK(BM_CosetBfs)->Args({2, 5})->Args({3, 4})->Args({2, 7});

void BM_DualWeights(benchmark::State& state) {
  const SupplementaryPair pair =
      make_preset("buM", static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                  1);
  for (auto _ : state) {
    auto d = dual_weight_set(pair.pcm_b);
    benchmark::DoNotOptimize(d.size());
  }
}
BENCHMARK(BM_DualWeights)->Args({2, 7})->Args({3, 4});

void BM_CompleteRegularity(benchmark::State& state) {
  const SupplementaryPair pair = make_preset("golay3");
  const CosetTable t = coset_weights(pair.pcm_b);
  for (auto _ : state) {
    CrResult cr = complete_regularity(pair.pcm_b, t);
    benchmark::DoNotOptimize(cr.is_cr);
  }
}
BENCHMARK(BM_CompleteRegularity);

void BM_StabilizerSearchGolay(benchmark::State& state) {
  const SupplementaryPair pair = make_preset("golay3");
  for (auto _ : state) {
    StabilizerResult sr = stabilizer_search(pair.set_a, 100'000'000);
    benchmark::DoNotOptimize(sr.generators.size());
  }
}
BENCHMARK(BM_StabilizerSearchGolay)->Unit(benchmark::kMillisecond);

void BM_OrbitClosure(benchmark::State& state) {
  const SupplementaryPair pair = make_preset("buM", 3, 4, 2);
  const CosetTable t = coset_weights(pair.pcm_b);
  const std::vector<SyndromeMap> gens = hkmn_generators(pair.field, 4, 2);
  for (auto _ : state) {
    OrbitPartition orb = orbits(gens, t, pair.set_b);
    benchmark::DoNotOptimize(orb.orbit_count);
  }
}
BENCHMARK(BM_OrbitClosure);

void BM_AnalyzeGolaySupplementary(benchmark::State& state) {
  const SupplementaryPair pair = make_preset("golay3");
  for (auto _ : state) {
    Analysis an = analyze_pcm(pair.pcm_b);
    benchmark::DoNotOptimize(an.summary.rho);
  }
}
BENCHMARK(BM_AnalyzeGolaySupplementary)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

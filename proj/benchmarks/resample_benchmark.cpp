// Microbenchmarks for the resampling stages and the model fits, matching the
// per-call complexity contracts: index draws O(n), Levinson-Durbin O(p^2),
// sieve regeneration O(T*p).

#include <benchmark/benchmark.h>

#include <vector>

#include "tsforest/ar_sieve.hpp"
#include "tsforest/block_bootstrap.hpp"
#include "tsforest/dgp.hpp"
#include "tsforest/forest.hpp"
#include "tsforest/rng.hpp"

using namespace tsforest;

namespace {

TimeSeries make_series(std::size_t T) {
  RngStream rng(7, T);
  return gen_arma(DgpSpec::ar({0.8}), T, rng);
}

void BM_IidIndices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iid_indices(n, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IidIndices)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_MbbIndices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mbb_indices(n, 8, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MbbIndices)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_SbbIndices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sbb_indices(n, 8, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SbbIndices)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_LevinsonDurbin(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const TimeSeries s = make_series(4096);
  const auto acvf = sample_acvf(s, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(levinson_durbin(acvf));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LevinsonDurbin)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNSquared);

void BM_ArsbResample(benchmark::State& state) {
  const auto T = static_cast<std::size_t>(state.range(0));
  const TimeSeries s = make_series(T);
  const ArFit fit = fit_ar(s, 2);
  RngStream rng(2, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(arsb_resample(fit, T, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ArsbResample)->RangeMultiplier(2)->Range(128, 8192)->Complexity(benchmark::oN);

void BM_LagEmbed(benchmark::State& state) {
  const auto T = static_cast<std::size_t>(state.range(0));
  const TimeSeries s = make_series(T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lag_embed(s, 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LagEmbed)->RangeMultiplier(2)->Range(128, 8192)->Complexity(benchmark::oN);

void BM_GrowTree(benchmark::State& state) {
  const auto T = static_cast<std::size_t>(state.range(0));
  const TimeSeries s = make_series(T);
  const EmbeddedData data = lag_embed(s, 2);
  ForestConfig config;
  config.lag_count = 2;
  config.mtry = 1;
  RngStream rng(3, 0);
  std::vector<std::size_t> rows(data.row_count);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (auto _ : state) {
    RngStream tree_rng = rng.substream(1);
    benchmark::DoNotOptimize(grow_tree(data, rows, config, tree_rng));
  }
}
BENCHMARK(BM_GrowTree)->Arg(100)->Arg(500)->Arg(1000);

void BM_FitTreeIid(benchmark::State& state) {
  const auto T = static_cast<std::size_t>(state.range(0));
  const TimeSeries s = make_series(T);
  const EmbeddedData data = lag_embed(s, 2);
  ForestConfig config;
  config.lag_count = 2;
  config.strategy.kind = BootstrapKind::IID;
  config.strategy.block_length = 8;
  RngStream rng(4, 0);
  for (auto _ : state) {
    RngStream tree_rng = rng.substream(1);
    benchmark::DoNotOptimize(fit_tree(data, config, s, nullptr, tree_rng));
  }
}
BENCHMARK(BM_FitTreeIid)->Arg(100)->Arg(500)->Arg(1000);

void BM_FitTreeArsb(benchmark::State& state) {
  const auto T = static_cast<std::size_t>(state.range(0));
  const TimeSeries s = make_series(T);
  const EmbeddedData data = lag_embed(s, 2);
  const ArFit fit = fit_ar_auto(s);
  ForestConfig config;
  config.lag_count = 2;
  config.strategy.kind = BootstrapKind::ARSB;
  RngStream rng(5, 0);
  for (auto _ : state) {
    RngStream tree_rng = rng.substream(1);
    benchmark::DoNotOptimize(fit_tree(data, config, s, &fit, tree_rng));
  }
}
BENCHMARK(BM_FitTreeArsb)->Arg(100)->Arg(500)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

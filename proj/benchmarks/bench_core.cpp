#include "dml/algcore/structure.hpp"
#include "dml/cohom/cohomology.hpp"
#include "dml/degen/parametric.hpp"
#include "dml/shell/catalog.hpp"
#include "dml/shell/parse.hpp"
#include "dml/shell/witnesses.hpp"
#include "dml/shell/audit.hpp"

#include <benchmark/benchmark.h>

namespace {

const std::vector<std::string> kIds = {"D5_01", "D6_06", "D7_07", "D7_14", "D8_36", "D9_38"};

dml::Algebra algebra(const benchmark::State& state) {
  return dml::Catalog::builtin().get(kIds[static_cast<std::size_t>(state.range(0))]).algebra;
}

void BM_H2Basis(benchmark::State& state) {
  const auto a = algebra(state);
  for (auto _ : state) benchmark::DoNotOptimize(dml::h2_basis(a));
  state.SetLabel(kIds[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_H2Basis)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_DerivationAlgebra(benchmark::State& state) {
  const auto a = algebra(state);
  for (auto _ : state) benchmark::DoNotOptimize(dml::derivation_algebra(a));
  state.SetLabel(kIds[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_DerivationAlgebra)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  const auto a = algebra(state);
  for (auto _ : state) benchmark::DoNotOptimize(dml::fingerprint(a));
  state.SetLabel(kIds[static_cast<std::size_t>(state.range(0))]);
}
BENCHMARK(BM_Fingerprint)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_LimitAlgebra(benchmark::State& state) {
  const auto& w = dml::printed_witnesses()[static_cast<std::size_t>(state.range(0))];
  const auto src = dml::Catalog::builtin().get(w.source).algebra;
  const auto basis = dml::parse_parametric_basis(w.basis_text, src.dim());
  for (auto _ : state) benchmark::DoNotOptimize(dml::limit_algebra(src, basis));
  state.SetLabel(w.source + " -> " + w.target);
}
BENCHMARK(BM_LimitAlgebra)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SevenDimGraph(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dml::seven_dim_graph());
}
BENCHMARK(BM_SevenDimGraph)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

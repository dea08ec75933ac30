#include <benchmark/benchmark.h>

#include "rgp/catalog.hpp"
#include "rgp/graph_ops.hpp"
#include "rgp/hyperbolic.hpp"
#include "rgp/qpoly.hpp"

using namespace rgp;

namespace {

// Banana with n parallel edges; planar embedding.
RibbonGraph banana(benchmark::State& state) { return catalog::banana(static_cast<std::size_t>(state.range(0)), true); }

void BM_QExpansion(benchmark::State& state) {
  const auto g = banana(state);
  for (auto _ : state) benchmark::DoNotOptimize(q_by_expansion(g, RSequenceSpec::symbolic()));
}

void BM_QReduction(benchmark::State& state) {
  const auto g = banana(state);
  for (auto _ : state) benchmark::DoNotOptimize(q_by_reduction(g, RSequenceSpec::symbolic()));
}

void BM_QReductionNoMemo(benchmark::State& state) {
  const auto g = banana(state);
  ReductionOptions opt;
  opt.memoize = false;
  for (auto _ : state) benchmark::DoNotOptimize(q_by_reduction(g, RSequenceSpec::symbolic(), opt));
}

void BM_HU(benchmark::State& state) {
  const auto g = catalog::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hu(g));
}

void BM_HUCritical(benchmark::State& state) {
  const auto g = catalog::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hu_via_critical_algorithm(g));
}

void BM_HV(benchmark::State& state) {
  const auto g = catalog::star(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(hv(g));
}

void BM_SymanzikU(benchmark::State& state) {
  const auto g = catalog::banana(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(symanzik_u(g));
}

void BM_ClassCounts(benchmark::State& state) {
  const auto g = catalog::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_counts(g));
}

void BM_PartialDual(benchmark::State& state) {
  const auto g = catalog::cycle(static_cast<std::size_t>(state.range(0)));
  auto labels = g.edge_labels();
  const EdgeSubset half(labels.begin(), labels.begin() + static_cast<long>(labels.size() / 2));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(partial_dual(g, half)));
}

}  // namespace

BENCHMARK(BM_QExpansion)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QReduction)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QReductionNoMemo)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HU)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HUCritical)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HV)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymanzikU)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassCounts)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialDual)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

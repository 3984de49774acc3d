#include <benchmark/benchmark.h>

#include "sesqui/curves/pipeline.hpp"
#include "sesqui/exact/series.hpp"
#include "sesqui/scattering/completion.hpp"
#include "sesqui/staircase/exceptional.hpp"

using namespace sesqui;

namespace {

TruncatedSeries dense_unit(int K) {
    TruncatedSeries f = TruncatedSeries::one(K);
    for (int k = 1; k < K; ++k) {
        for (int a = 0; a <= k; ++a) f.add_term({{a, k - a}, k}, Rational(k + a, a + 1));
    }
    return f;
}

scattering::ScatteringDiagram standard(int K, int k1, int k2) {
    std::vector<LatticeVector> gens{{1, 0}, {0, 1}};
    std::vector<int> exps{k1, k2};
    return scattering::incoming_diagram(K, gens, exps);
}

void BM_SeriesMul(benchmark::State& state) {
    auto f = dense_unit(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_SeriesMul)->Arg(6)->Arg(10);

void BM_SeriesPow(benchmark::State& state) {
    auto f = dense_unit(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(series_pow(f, -4));
}
BENCHMARK(BM_SeriesPow)->Arg(6)->Arg(10);

void BM_SeriesLog(benchmark::State& state) {
    auto f = dense_unit(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(series_log(f));
}
BENCHMARK(BM_SeriesLog)->Arg(6)->Arg(10);

void BM_CompleteD22(benchmark::State& state) {
    auto d = standard(int(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(scattering::ks_complete(d));
}
BENCHMARK(BM_CompleteD22)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_CompleteD33(benchmark::State& state) {
    auto d = standard(int(state.range(0)), 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(scattering::ks_complete(d));
}
BENCHMARK(BM_CompleteD33)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExceptionalClasses(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(staircase::enumerate_exceptional_classes(state.range(0)));
}
BENCHMARK(BM_ExceptionalClasses)->Arg(13);

void BM_Pipeline(benchmark::State& state) {
    curves::PipelineOptions o;
    o.order = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(curves::verify_theorem_c_pipeline(o));
}
BENCHMARK(BM_Pipeline)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "lowsum/cond_expect.hpp"
#include "lowsum/embedders.hpp"
#include "lowsum/generators.hpp"
#include "lowsum/local_search.hpp"
#include "lowsum/oracle.hpp"

using namespace lowsum;

namespace {

EdgeLabeling bench_labeling(int n) {
    return gen_zero_sum_labeling(n, 12345, LabelingPattern::uniform);
}

} // namespace

static void BM_GreedyEmbed(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    EdgeLabeling labeling = bench_labeling(n);
    SpanningForest forest = gen_forest(n, ForestKind::random_tree, 99);
    GreedyConfig config(ExactValue::ratio(1, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_embed(labeling, forest, config).c_value);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_GreedyEmbed)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void BM_Prop2Embed(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    EdgeLabeling labeling = bench_labeling(n);
    SpanningForest forest = gen_forest(n, ForestKind::random_tree, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prop2_embed(labeling, forest).c_value);
    }
}
BENCHMARK(BM_Prop2Embed)->Arg(64)->Arg(256);

static void BM_PlacementChain(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    EdgeLabeling labeling = bench_labeling(n);
    SpanningForest forest = gen_forest(n, ForestKind::random_tree, 99);
    for (auto _ : state) {
        ExpectationState chain(labeling, forest, VertexOrdering::identity(n));
        for (int p = 1; p <= n; ++p) chain.place(p);
        benchmark::DoNotOptimize(chain.expectation());
    }
}
BENCHMARK(BM_PlacementChain)->Arg(128)->Arg(512);

static void BM_EvaluateCandidates(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    EdgeLabeling labeling = bench_labeling(n);
    SpanningForest forest = gen_forest(n, ForestKind::random_tree, 99);
    ExpectationState half(labeling, forest, VertexOrdering::identity(n));
    for (int p = 1; p <= n / 2; ++p) half.place(p);
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (int p = n / 2 + 1; p <= n; ++p) {
            acc += half.evaluate_candidate(p).value.num();
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_EvaluateCandidates)->Arg(128)->Arg(512);

static void BM_LocalSearchDescent(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    EdgeLabeling labeling = bench_labeling(n);
    SpanningSubgraph start = gen_regular_subgraph(n, 3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            descend(labeling, start, DescentRule::best_improvement, true).trace.size());
    }
}
BENCHMARK(BM_LocalSearchDescent)->Arg(16)->Arg(32);

static void BM_OracleEnumeration(benchmark::State& state) {
    EdgeLabeling labeling = bench_labeling(8);
    SpanningForest forest = gen_forest(8, ForestKind::random_tree, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_sums(labeling, forest).total);
    }
}
BENCHMARK(BM_OracleEnumeration);

BENCHMARK_MAIN();

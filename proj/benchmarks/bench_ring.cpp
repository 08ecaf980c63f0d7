#include <benchmark/benchmark.h>

#include "orbifold/isomorphism.hpp"
#include "orbifold/structure_table.hpp"
#include "orbifold/verification.hpp"

using namespace orbifold;

namespace {

Weights jiang_example() { return Weights::of({1, 2, 2, 3, 3, 3}); }

void BM_StructureTables(benchmark::State& state) {
    Weights w = jiang_example();
    for (auto _ : state) {
        RingBundle bundle = RingBundle::make(w);
        benchmark::DoNotOptimize(bundle.model_table.product.data());
    }
}
BENCHMARK(BM_StructureTables);

void BM_CupThroughput(benchmark::State& state) {
    ModelRing ring(Weights::of({5, 6, 7, 8}));
    std::int64_t total = ring.weights().total();
    for (auto _ : state) {
        for (std::int64_t j = 0; j < total; ++j) {
            for (std::int64_t k = 0; k < total; ++k) {
                ModelElement p = ring.cup(j, k);
                benchmark::DoNotOptimize(p.is_zero());
            }
        }
    }
    state.SetItemsProcessed(state.iterations() * total * total);
}
BENCHMARK(BM_CupThroughput);

void BM_VerifyAll(benchmark::State& state) {
    Weights w = state.range(0) == 0 ? Weights::of({1, 2, 3}) : jiang_example();
    for (auto _ : state) {
        VerificationReport report = verify_all(w);
        benchmark::DoNotOptimize(report.passed());
    }
}
BENCHMARK(BM_VerifyAll)->Arg(0)->Arg(1);

void BM_GramElimination(benchmark::State& state) {
    FrobeniusTable table = structure_table(ModelRing(Weights::of({6, 6, 6, 6})));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_invertible(table));
    }
}
BENCHMARK(BM_GramElimination);

} // namespace

BENCHMARK_MAIN();

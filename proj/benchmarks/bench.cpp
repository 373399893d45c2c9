#include <benchmark/benchmark.h>

#include "polarmin/body_ops.hpp"
#include "polarmin/corpus.hpp"
#include "polarmin/lattice.hpp"
#include "polarmin/search.hpp"
#include "polarmin/verify.hpp"

using namespace polarmin;

namespace {

const std::vector<VPolygon>& bodies() {
    static const std::vector<VPolygon> c = corpus::make_corpus(7, 64);
    return c;
}

void BM_ConvexHull(benchmark::State& state) {
    corpus::Rng rng(1);
    std::vector<Vec2> pts;
    for (long i = 0; i < state.range(0); ++i) pts.push_back({rng.rational(20, 7), rng.rational(20, 7)});
    for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHull)->Arg(8)->Arg(64)->Arg(512);

void BM_Polar(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        const VPolygon& p = bodies()[i++ % bodies().size()];
        benchmark::DoNotOptimize(polar(translate(Body(p), -centroid(p))).polygon());
    }
}
BENCHMARK(BM_Polar);

void BM_SuccessiveMinima(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) {
        const VPolygon& p = bodies()[i++ % bodies().size()];
        benchmark::DoNotOptimize(successive_minima(polar(central_symmetral(Body(p)))));
    }
}
BENCHMARK(BM_SuccessiveMinima);

void BM_AllChecks(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(all_checks(Body(bodies()[i++ % bodies().size()])));
}
BENCHMARK(BM_AllChecks);

void BM_SearchSeed(benchmark::State& state) {
    const Rat t(3, 2);
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_seed(t, seed++));
}
BENCHMARK(BM_SearchSeed)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "rainbow_forge/almost_rainbow.hpp"
#include "rainbow_forge/constructions.hpp"
#include "rainbow_forge/expander.hpp"
#include "rainbow_forge/group.hpp"
#include "rainbow_forge/process.hpp"
#include "rainbow_forge/rainbow_search.hpp"
#include "rainbow_forge/rng.hpp"

using namespace rainbow;

static void BM_RainbowReachability(benchmark::State& state) {
    ColoredGraph g = complete_one_factorization(static_cast<int>(state.range(0)));
    ColorSet palette = g.empty_color_set();
    CounterRng rng(1);
    for (int c = 0; c < g.color_count(); ++c)
        if (rng.coin()) palette.insert(c);
    for (auto _ : state) {
        auto r = rainbow_reachable_set(g, 0, palette);
        benchmark::DoNotOptimize(r.size());
    }
}
BENCHMARK(BM_RainbowReachability)->Arg(12)->Arg(16)->Arg(20);

static void BM_ExactCycleAbsenceHypercube(benchmark::State& state) {
    ColoredGraph q = hypercube(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto res = rainbow_cycle_exact(q, q.color_count());
        benchmark::DoNotOptimize(res.cycle.has_value());
    }
}
BENCHMARK(BM_ExactCycleAbsenceHypercube)->Arg(4)->Arg(5)->Arg(6);

static void BM_ExpanderVerifyExhaustive(benchmark::State& state) {
    ColoredGraph g = complete_one_factorization(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cert = verify_robust_expander(g, VerifyMode::Exhaustive);
        benchmark::DoNotOptimize(cert.passed());
    }
}
BENCHMARK(BM_ExpanderVerifyExhaustive)->Arg(8)->Arg(10)->Arg(12);

static void BM_ExtractExact(benchmark::State& state) {
    CounterRng rng(7);
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(state.range(0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(1, 2)) edges.emplace_back(u, v);
    ColoredGraph g = vizing_color(SimpleGraph(n, edges));
    for (auto _ : state) {
        auto [sub, cert] = extract_expander(g, ExtractMode::Exact);
        benchmark::DoNotOptimize(sub.graph.vertex_count());
    }
}
BENCHMARK(BM_ExtractExact)->Arg(12)->Arg(16)->Arg(18);

static void BM_DissociationSearch(benchmark::State& state) {
    FiniteGroup s3 = FiniteGroup::parse("S3");
    std::vector<FiniteGroup::Elem> t3;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            FiniteGroup::Elem e = s3.identity();
            std::swap(e[i], e[j]);
            t3.push_back(e);
        }
    auto [g, lifted] = lift_dissociated_product(s3, t3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto out = is_dissociated(g, lifted);
        benchmark::DoNotOptimize(out.dissociated());
    }
}
BENCHMARK(BM_DissociationSearch)->Arg(1)->Arg(2);

static void BM_VizingColor(benchmark::State& state) {
    CounterRng rng(99);
    int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(1, 4)) edges.emplace_back(u, v);
    SimpleGraph g(n, edges);
    for (auto _ : state) {
        auto coloured = vizing_color(g);
        benchmark::DoNotOptimize(coloured.color_count());
    }
}
BENCHMARK(BM_VizingColor)->Arg(64)->Arg(128)->Arg(256);

static void BM_ChainProbabilityColumn(benchmark::State& state) {
    int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rational acc = 0;
        for (int i = 0; i <= steps; ++i)
            acc += chain_probability_exact(i, steps, steps, ChainProbabilityKind::A);
        benchmark::DoNotOptimize(acc == 0);
    }
}
BENCHMARK(BM_ChainProbabilityColumn)->Arg(25)->Arg(50);

static void BM_SplittingTrial(benchmark::State& state) {
    ColoredGraph g = complete_one_factorization(static_cast<int>(state.range(0)));
    ProcessConfig cfg = ProcessConfig::for_graph(g.vertex_count());
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto rec = run_splitting_trial(g, 0, cfg, seed++);
        benchmark::DoNotOptimize(rec.checkpoint_sizes.back());
    }
}
BENCHMARK(BM_SplittingTrial)->Arg(12)->Arg(16);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include <fanzoo/cantor.hpp>
#include <fanzoo/catalog.hpp>
#include <fanzoo/dsl.hpp>
#include <fanzoo/fan.hpp>
#include <fanzoo/trees.hpp>
#include <fanzoo/weak_fan.hpp>

namespace {

using namespace fanzoo;

void BM_muc_prefix_sum(benchmark::State& state) {
    const Functional2 y = make_prefix_sum(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(muc(y));
    }
}
BENCHMARK(BM_muc_prefix_sum)->Arg(4)->Arg(8)->Arg(12);

void BM_special_fan(benchmark::State& state) {
    const Functional2 g = make_prefix_sum(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(special_fan(g).bound);
    }
}
BENCHMARK(BM_special_fan)->Arg(4)->Arg(8)->Arg(12);

void BM_union_measure(benchmark::State& state) {
    const std::uint64_t len = static_cast<std::uint64_t>(state.range(0));
    std::vector<Stem> stems;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); v += 3) {
        stems.push_back(Stem::of_index(v, len));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(union_measure(stems));
    }
}
BENCHMARK(BM_union_measure)->Arg(8)->Arg(12)->Arg(16);

void BM_greedy_cover(benchmark::State& state) {
    const Functional2 f =
        tree_bar_functional(gen_bar_at(static_cast<std::uint64_t>(state.range(0)),
                                       static_cast<std::uint64_t>(state.range(0)) + 1, 9));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_cover(f).stages.size());
    }
}
BENCHMARK(BM_greedy_cover)->Arg(4)->Arg(6)->Arg(8);

void BM_lambda_greedy(benchmark::State& state) {
    const Functional2 g = dsl::compile(dsl::parse("f[0]+f[1]+f[2]+1"));
    const std::uint64_t k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambda_greedy(g, k).witnesses.size());
    }
}
BENCHMARK(BM_lambda_greedy)->Arg(2)->Arg(8)->Arg(64);

void BM_dsl_eval(benchmark::State& state) {
    const Functional2 y = dsl::compile(dsl::parse("max(f[1], f[3])*2 + 1 - f[0]"));
    const BitSeq f = BitSeq::eventually(Stem::from_string("0101"), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(y(f));
    }
}
BENCHMARK(BM_dsl_eval);

void BM_survival_tree(benchmark::State& state) {
    const std::uint64_t depth = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_survival(Dyadic(3, 2), depth, seed++).node_count());
    }
}
BENCHMARK(BM_survival_tree)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();

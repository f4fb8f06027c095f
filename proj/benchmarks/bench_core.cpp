#include <benchmark/benchmark.h>

#include "resnet/ensemble.hpp"
#include "resnet/rng.hpp"
#include "resnet/signed.hpp"
#include "resnet/topology.hpp"

namespace {

resnet::MultiEdgeNetwork random_net(std::size_t n, std::int64_t m,
                                    std::uint64_t seed) {
    resnet::Rng rng(seed);
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = "a" + std::to_string(i);
    }
    std::vector<std::int64_t> counts(n * n, 0);
    for (std::int64_t e = 0; e < m; ++e) {
        const auto i = rng.below(n);
        auto j = rng.below(n);
        if (i == j) {
            j = (j + 1) % n;
        }
        counts[i * n + j] += 1;
    }
    return resnet::MultiEdgeNetwork(std::move(ids), std::move(counts), true);
}

void BM_KCore(benchmark::State& state) {
    const auto net = random_net(static_cast<std::size_t>(state.range(0)), 2000, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resnet::kcore_decomposition(net, false));
    }
}
BENCHMARK(BM_KCore)->Arg(50)->Arg(200);

void BM_Eigengap(benchmark::State& state) {
    const auto net = random_net(static_cast<std::size_t>(state.range(0)), 2000, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resnet::eigengap(net));
    }
}
BENCHMARK(BM_Eigengap)->Arg(50)->Arg(200);

void BM_InferSigned(benchmark::State& state) {
    const auto net = random_net(static_cast<std::size_t>(state.range(0)), 1000, 7);
    const auto e = resnet::Ensemble::from_network(net);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resnet::infer_signed(net, e));
    }
}
BENCHMARK(BM_InferSigned)->Arg(30)->Arg(100);

void BM_Potentiality(benchmark::State& state) {
    const auto net = random_net(100, state.range(0), 7);
    const auto e = resnet::Ensemble::from_network(net);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resnet::potentiality(e));
    }
}
BENCHMARK(BM_Potentiality)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

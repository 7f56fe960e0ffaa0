#include <crystals/aip.hh>
#include <crystals/album.hh>
#include <crystals/corpus.hh>
#include <crystals/diophantine.hh>
#include <crystals/fooling.hh>

#include <benchmark/benchmark.h>

using namespace crystals;

namespace
{
    auto mine(benchmark::State & state) -> void
    {
        auto m = fooling_matrix(3);
        int q = static_cast<int>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(mine_crystal(m, q));
    }

    auto realise(benchmark::State & state) -> void
    {
        Rng rng{4};
        int q = static_cast<int>(state.range(0));
        auto album = random_realistic_album(rng, 2, Shape::cubical(3, q), -5, 5);
        for (auto _ : state)
            benchmark::DoNotOptimize(realize(album));
    }

    auto hermite(benchmark::State & state) -> void
    {
        Rng rng{5};
        auto n = static_cast<std::size_t>(state.range(0));
        BigMatrix a{n, n + 2};
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n + 2; ++c)
                a(r, c) = rng.uniform(-9, 9);
        for (auto _ : state)
            benchmark::DoNotOptimize(hermite_normal_form(a));
    }

    auto aip(benchmark::State & state) -> void
    {
        auto g = clique(static_cast<int>(state.range(0)));
        auto h = clique(3);
        int k = static_cast<int>(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(aip_level_k(g, h, k));
    }

    auto certificate(benchmark::State & state) -> void
    {
        auto g = clique(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(certify_fooling_witness(g, 3, 2));
    }
}

BENCHMARK(mine)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(realise)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(hermite)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(aip)->Args({4, 2})->Args({4, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(certificate)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

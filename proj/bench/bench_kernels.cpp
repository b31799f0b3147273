// Serial reference kernel against the reduced parallel kernel on composites of f_n over a clone's m-ary part.
#include "clonoid/engine.hpp"
#include "clonoid/families.hpp"
#include "clonoid/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace clonoid;

namespace {

std::vector<std::uint64_t> pool(const char* clone, unsigned m) {
    std::vector<std::uint64_t> words;
    for (const auto& g : arityPart(Registry::standard().get(clone), m)) words.push_back(g.word0());
    return words;
}

template <CompositeScan (*Kernel)(const BooleanFunction&, const std::vector<std::uint64_t>&, unsigned)>
void scan(benchmark::State& state, const char* clone) {
    const unsigned n = static_cast<unsigned>(state.range(0)), m = static_cast<unsigned>(state.range(1));
    const BooleanFunction outer = pippengerF(n);
    const auto inner = pool(clone, m);
    std::uint64_t evaluations = 0;
    for (auto _ : state) {
        const CompositeScan s = Kernel(outer, inner, m);
        evaluations = s.evaluations;
        benchmark::DoNotOptimize(s.composites.data());
    }
    state.counters["evaluations"] = static_cast<double>(evaluations);
    state.counters["threads"] = Kernel == scanCompositesParallel ? kernelThreads() : 1;
}

void serialOmega1(benchmark::State& s) { scan<scanCompositesSerial>(s, "Omega1"); }
void parallelOmega1(benchmark::State& s) { scan<scanCompositesParallel>(s, "Omega1"); }
void serialV(benchmark::State& s) { scan<scanCompositesSerial>(s, "V"); }
void parallelV(benchmark::State& s) { scan<scanCompositesParallel>(s, "V"); }

} // namespace

BENCHMARK(serialOmega1)->Args({4, 5})->Args({5, 5})->Args({5, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(parallelOmega1)->Args({4, 5})->Args({5, 5})->Args({5, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(serialV)->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(parallelV)->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

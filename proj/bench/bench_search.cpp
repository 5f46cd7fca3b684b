#include "semihilb/search.hpp"

#include <benchmark/benchmark.h>

using namespace semihilb;

namespace {

SearchConfig config(Int e, int offset, Int bound, int workers) {
    SearchConfig c;
    c.e_lo = c.e_hi = e;
    c.v_offset = offset;
    c.gen_bound = bound;
    c.workers = workers;
    return c;
}

void BM_serial_e13(benchmark::State& st) {
    const auto c = config(13, 3, st.range(0), 1);
    for (auto _ : st) benchmark::DoNotOptimize(search_decreasing_serial(c));
}

void BM_parallel_e13(benchmark::State& st) {
    const auto c = config(13, 3, st.range(0), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(search_decreasing(c));
}

void BM_serial_e17(benchmark::State& st) {
    const auto c = config(17, 4, st.range(0), 1);
    for (auto _ : st) benchmark::DoNotOptimize(search_decreasing_serial(c));
}

void BM_parallel_e17(benchmark::State& st) {
    const auto c = config(17, 4, st.range(0), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(search_decreasing(c));
}

} // namespace

BENCHMARK(BM_serial_e13)->Arg(104)->Arg(156)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_e13)->ArgsProduct({{104, 156}, {2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_e17)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_e17)->ArgsProduct({{80}, {2, 4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

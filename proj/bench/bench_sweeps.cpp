// Serial reference vs OpenMP driver for each sweep. Both produce identical
// reports; the benchmark aborts if they ever differ.

#include "qrl/harness.hpp"

#include <benchmark/benchmark.h>

#include <cstdlib>

using namespace qrl;

namespace {

SweepOptions options(benchmark::State& state, Execution execution)
{
    SweepOptions o;
    o.range_max = static_cast<u64>(state.range(0));
    o.execution = execution;
    return o;
}

template <class Sweep>
void run(benchmark::State& state, Execution execution, Sweep sweep)
{
    const VerificationReport reference = sweep(options(state, Execution::Serial));
    for (auto _ : state) {
        VerificationReport r = sweep(options(state, execution));
        if (!(r == reference))
            std::abort();
        benchmark::DoNotOptimize(r);
    }
    state.counters["tested"] = static_cast<double>(reference.tested);
}

void BM_Dirichlet(benchmark::State& state, Execution execution)
{
    run(state, execution, [](const SweepOptions& o) { return verify_dirichlet(17, o); });
}

void BM_Kronecker(benchmark::State& state, Execution execution)
{
    run(state, execution, [](const SweepOptions& o) { return verify_kronecker(69, o); });
}

void BM_Quartic(benchmark::State& state, Execution execution)
{
    run(state, execution, [](const SweepOptions& o) { return verify_quartic(37, 3, o); });
}

} // namespace

BENCHMARK_CAPTURE(BM_Dirichlet, serial, Execution::Serial)->Arg(50'000)->Arg(500'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Dirichlet, parallel, Execution::Parallel)->Arg(50'000)->Arg(500'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Kronecker, serial, Execution::Serial)->Arg(50'000)->Arg(500'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Kronecker, parallel, Execution::Parallel)->Arg(50'000)->Arg(500'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Quartic, serial, Execution::Serial)->Arg(50'000)->Arg(500'000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Quartic, parallel, Execution::Parallel)->Arg(50'000)->Arg(500'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include "hypwin/hyperbolic_analysis.hpp"
#include "hypwin/sweep.hpp"

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

using namespace hypwin;

namespace {

std::vector<std::complex<double>> test_signal(std::size_t n)
{
    const auto w = sample_window(WindowSpec::hyperbolic(4.0, 0.606), 4096);
    const auto padded = zero_pad(w, static_cast<int>(n / 4096));
    return {padded.begin(), padded.end()};
}

void fft(benchmark::State& state, dft::Execution exec)
{
    const auto input = test_signal(static_cast<std::size_t>(state.range(0)));
    auto data = input;
    for (auto _ : state) {
        data = input;
        dft::fft_radix2(data, exec);
        benchmark::DoNotOptimize(data.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FftSerial(benchmark::State& state) { fft(state, dft::Execution::Serial); }
void BM_FftParallel(benchmark::State& state) { fft(state, dft::Execution::Parallel); }

void BM_NaiveDft(benchmark::State& state)
{
    std::vector<double> x(static_cast<std::size_t>(state.range(0)), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dft::naive_dft(x));
    }
}

void BM_FftSameSize(benchmark::State& state)
{
    std::vector<double> x(static_cast<std::size_t>(state.range(0)), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dft::forward(x, dft::Execution::Serial));
    }
}

// A sidelobe sweep over ENBW targets: the unit of work the CLI parallelises.
void sweep(benchmark::State& state, dft::Execution exec)
{
    const auto points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto out = parallel_map(
            points,
            [&](std::size_t i) {
                const double target = 1.1 + 0.8 * static_cast<double>(i) / static_cast<double>(points);
                const double s = solve_warp_for_enbw(2.0, target, 4096);
                return max_sidelobe_db(
                    compute_spectrum(sample_window(WindowSpec::hyperbolic(2.0, s), 4096), 16, dft::Execution::Serial));
            },
            exec);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_SweepSerial(benchmark::State& state) { sweep(state, dft::Execution::Serial); }
void BM_SweepParallel(benchmark::State& state) { sweep(state, dft::Execution::Parallel); }

} // namespace

BENCHMARK(BM_FftSerial)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FftParallel)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_NaiveDft)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FftSameSize)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

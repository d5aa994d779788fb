// Serial reference vs OpenMP kernels: truncated series convolution over the
// Poly coefficient ring, and the verdict runner on whole suites.

#include "derivpoly/derivative_polys.hpp"
#include "derivpoly/runner.hpp"
#include "derivpoly/series.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace derivpoly;

Series<Poly> eulerian_egf(int order)
{
    std::vector<Poly> e;
    for (int n = 0; n <= order; ++n)
        e.push_back(build_E(n));
    return egf_series<Poly>(e, order);
}

void BM_ConvolvePolySerial(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    const auto a = eulerian_egf(order);
    const auto b = series_exp_linear(Poly({Rational(1), Rational(-1)}), order);
    for (auto _ : state)
        benchmark::DoNotOptimize(mul_serial(a, b));
}

void BM_ConvolvePolyParallel(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    const auto a = eulerian_egf(order);
    const auto b = series_exp_linear(Poly({Rational(1), Rational(-1)}), order);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}

void BM_SuiteSerial(benchmark::State& state)
{
    const auto jobs = suite_jobs(static_cast<Suite>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_jobs_serial(jobs));
}

void BM_SuiteParallel(benchmark::State& state)
{
    const auto jobs = suite_jobs(static_cast<Suite>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_jobs_parallel(jobs));
}

} // namespace

BENCHMARK(BM_ConvolvePolySerial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolvePolyParallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)
    ->Arg(static_cast<int>(Suite::Integrals))
    ->Arg(static_cast<int>(Suite::Relations))
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)
    ->Arg(static_cast<int>(Suite::Integrals))
    ->Arg(static_cast<int>(Suite::Relations))
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "dualperron/dualperron.hpp"

using namespace dualperron;

namespace {

DualMatrix bench_matrix(std::size_t n, DualMode mode = DualMode::signed_) {
    return generate_primitive(n, 0.7, mode, 42);
}

void BM_DualMatmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DualMatrix a = bench_matrix(n);
    for (auto _ : state) {
        DualMatrix c = matmul(a, a);
        benchmark::DoNotOptimize(c.s.data().data());
    }
}
BENCHMARK(BM_DualMatmul)->Arg(8)->Arg(32)->Arg(128);

void BM_MatPow(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DualMatrix a = bench_matrix(n);
    // Tame the spectral radius so powers stay finite.
    const double rho = real_perron(a.s).rho;
    a = DualMatrix((0.9 / rho) * a.s, a.d);
    for (auto _ : state) {
        DualMatrix p = matpow(a, 32);
        benchmark::DoNotOptimize(p.d.data().data());
    }
}
BENCHMARK(BM_MatPow)->Arg(8)->Arg(32);

void BM_RealPerron(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DualMatrix a = bench_matrix(n);
    for (auto _ : state) {
        RealPerron p = real_perron(a.s);
        benchmark::DoNotOptimize(p.rho);
    }
}
BENCHMARK(BM_RealPerron)->Arg(8)->Arg(32)->Arg(128);

void BM_PerronDirect(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DualMatrix a = bench_matrix(n);
    for (auto _ : state) {
        PerronResult r = perron_eigenpair(a);
        benchmark::DoNotOptimize(r.lambda);
    }
}
BENCHMARK(BM_PerronDirect)->Arg(8)->Arg(32);

void BM_CollatzSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DualMatrix a = bench_matrix(n);
    const RealVector x0(n, 1.0);
    for (auto _ : state) {
        CollatzTrace t = collatz_solve(a, x0);
        benchmark::DoNotOptimize(t.final_lambda);
    }
}
BENCHMARK(BM_CollatzSolve)->Arg(8)->Arg(32);

void BM_CheckPrimitive(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DualMatrix a = generate_primitive(n, 0.1, DualMode::zero, 42);
    for (auto _ : state) {
        StructureReport r = check_primitive(a);
        benchmark::DoNotOptimize(r.primitive);
    }
}
BENCHMARK(BM_CheckPrimitive)->Arg(8)->Arg(32)->Arg(64);

void BM_PowerDecay(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    DualMatrix a = bench_matrix(n);
    const double rho = real_perron(a.s).rho;
    a = DualMatrix((0.9 / rho) * a.s, a.d);
    for (auto _ : state) {
        DecayReport r = power_decay(a, 500, 1e-10);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(BM_PowerDecay)->Arg(8)->Arg(32);

} // namespace

BENCHMARK_MAIN();

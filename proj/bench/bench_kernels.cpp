// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <numeric>

#include "cyclo/circuit.hpp"
#include "cyclo/random.hpp"
#include "cyclo/synth_tower.hpp"

namespace {

cyclo::RingMatrix word_unitary(int level, int qubits, std::uint64_t seed) {
    return cyclo::eval(cyclo::random_word(level, qubits, 40, seed));
}

void BM_MatmulParallel(benchmark::State &state) {
    const int q = static_cast<int>(state.range(0));
    const cyclo::RingMatrix a = word_unitary(4, q, 1), b = word_unitary(4, q, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::matmul(a, b));
    }
}

void BM_MatmulSerial(benchmark::State &state) {
    const int q = static_cast<int>(state.range(0));
    const cyclo::RingMatrix a = word_unitary(4, q, 1), b = word_unitary(4, q, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::matmul_serial(a, b));
    }
}

const cyclo::Circuit &synthesized() {
    static const cyclo::Circuit c = cyclo::synthesize(word_unitary(4, 2, 7), 2).circuit;
    return c;
}

std::vector<std::size_t> all_columns(const cyclo::Circuit &c) {
    std::vector<std::size_t> cols(c.dim());
    std::iota(cols.begin(), cols.end(), 0);
    return cols;
}

void BM_EvalColumnsParallel(benchmark::State &state) {
    const auto cols = all_columns(synthesized());
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::eval_columns(synthesized(), cols, true));
    }
}

void BM_EvalColumnsSerial(benchmark::State &state) {
    const auto cols = all_columns(synthesized());
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::eval_columns(synthesized(), cols, false));
    }
}

void BM_EvalDenseReference(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclo::eval_serial(synthesized()));
    }
}

}  // namespace

BENCHMARK(BM_MatmulParallel)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatmulSerial)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalColumnsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalColumnsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalDenseReference)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();

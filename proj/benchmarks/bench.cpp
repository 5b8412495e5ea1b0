#include <benchmark/benchmark.h>

#include <hurwitz/chambers.hpp>
#include <hurwitz/partitions.hpp>
#include <hurwitz/patterns.hpp>
#include <hurwitz/series.hpp>

using namespace hurwitz;

namespace {

HurwitzInput bench_input(int d) {
    // (d-2, 2; d-1, 1): off every wall for d >= 5
    return HurwitzInput{Partition({d - 2, 2}), Partition({d - 1, 1})};
}

void BM_oracle(benchmark::State& state) {
    HurwitzInput in = bench_input(static_cast<int>(state.range(0)));
    int r = in.r_for_genus(2);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_oracle(in, r));
}
BENCHMARK(BM_oracle)->Arg(6)->Arg(10)->Arg(14);

void BM_closed_form(benchmark::State& state) {
    HurwitzInput in = bench_input(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        patterns::ClosedForm cf = patterns::closed_form(in);
        benchmark::DoNotOptimize(cf);
    }
}
BENCHMARK(BM_closed_form)->Arg(6)->Arg(10)->Arg(14);

void BM_closed_form_number(benchmark::State& state) {
    HurwitzInput in = bench_input(static_cast<int>(state.range(0)));
    int r = in.r_for_genus(2);
    for (auto _ : state) benchmark::DoNotOptimize(patterns::hurwitz_number(in, r));
}
BENCHMARK(BM_closed_form_number)->Arg(6)->Arg(10)->Arg(14);

void BM_character(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    std::vector<Partition> parts = partitions_of(d);
    for (auto _ : state)
        for (const Partition& lambda : parts)
            benchmark::DoNotOptimize(character(lambda, Partition({d - 1, 1})));
}
BENCHMARK(BM_character)->Arg(10)->Arg(14)->Arg(18);

void BM_series_multiply(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    LaurentSeries a = sigma_series(Rat(20), N);
    LaurentSeries b = inv_sigma_series(Rat(7), N);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_multiply)->Arg(25)->Arg(50)->Arg(100);

void BM_symbolic_polynomial(benchmark::State& state) {
    HurwitzInput in{Partition({5, 2}), Partition({4, 3})};
    int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chambers::symbolic_polynomial(in, g));
}
BENCHMARK(BM_symbolic_polynomial)->Arg(0)->Arg(1)->Arg(2);

}  // namespace

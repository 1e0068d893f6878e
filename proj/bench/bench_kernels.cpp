#include "jstab/reproduce.hpp"

#include <benchmark/benchmark.h>

using namespace jstab;

namespace {

std::vector<Rational> axis(int steps, const Rational& lo, const Rational& hi) {
    std::vector<Rational> v;
    for (int i = 0; i <= steps; ++i) v.push_back(lo + (hi - lo) * Rational(i, steps));
    return v;
}

const IntersectionModel& f1() {
    static const IntersectionModel m = hirzebruch(1);
    return m;
}

const DivisorClass H{Rational(1, 3), Rational(5, 3)};

void BM_segment_parallel(benchmark::State& st) {
    auto ts = axis(static_cast<int>(st.range(0)), 0, 1);
    for (auto _ : st) benchmark::DoNotOptimize(scan_segment(f1(), DivisorClass{1, 1}, H, ts));
}

void BM_segment_serial(benchmark::State& st) {
    auto ts = axis(static_cast<int>(st.range(0)), 0, 1);
    for (auto _ : st) benchmark::DoNotOptimize(scan_segment_serial(f1(), DivisorClass{1, 1}, H, ts));
}

void BM_plane_parallel(benchmark::State& st) {
    auto xs = axis(static_cast<int>(st.range(0)), Rational(1, 4), 3);
    auto ys = axis(static_cast<int>(st.range(0)), Rational(1, 2), 5);
    for (auto _ : st) benchmark::DoNotOptimize(scan_plane(f1(), H, xs, ys));
}

void BM_plane_serial(benchmark::State& st) {
    auto xs = axis(static_cast<int>(st.range(0)), Rational(1, 4), 3);
    auto ys = axis(static_cast<int>(st.range(0)), Rational(1, 2), 5);
    for (auto _ : st) benchmark::DoNotOptimize(scan_plane_serial(f1(), H, xs, ys));
}

void BM_oracle_parallel(benchmark::State& st) {
    FlagChain c{{DivisorClass{1, 1}, DivisorClass{1, 0}}};
    for (auto _ : st)
        benchmark::DoNotOptimize(lattice_count_oracle(f1(), DivisorClass{2, 3}, c, static_cast<int>(st.range(0))));
}

void BM_oracle_serial(benchmark::State& st) {
    FlagChain c{{DivisorClass{1, 1}, DivisorClass{1, 0}}};
    for (auto _ : st)
        benchmark::DoNotOptimize(
            lattice_count_oracle_serial(f1(), DivisorClass{2, 3}, c, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_segment_parallel)->Arg(64)->Arg(512);
BENCHMARK(BM_segment_serial)->Arg(64)->Arg(512);
BENCHMARK(BM_plane_parallel)->Arg(16)->Arg(48);
BENCHMARK(BM_plane_serial)->Arg(16)->Arg(48);
BENCHMARK(BM_oracle_parallel)->Arg(8)->Arg(16);
BENCHMARK(BM_oracle_serial)->Arg(8)->Arg(16);

BENCHMARK_MAIN();

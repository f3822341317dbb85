// Serial reference kernels against their OpenMP counterparts on gauge-oracle
// sized divisions.

#include <benchmark/benchmark.h>

#include "ks/gauge.hpp"
#include "ks/kernels.hpp"

namespace {

using namespace ks;

PiecewiseFunction integrator(std::size_t n) {
    Piece p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.push_back(Polynomial{0.1 * double(i), 1.0, 0.5 * double(j), -0.25});
    PiecewiseFunction smooth = PiecewiseFunction::from_piece({Kind::op, n}, 0.0, 1.0, std::move(p));
    PiecewiseFunction step =
        PiecewiseFunction::indicator(0.0, 1.0, {Interval::closed(0.5, 1.0)}, OperatorValue::identity(n));
    return lincomb(1.0, smooth, 1.0, step);
}

PiecewiseFunction integrand(std::size_t n) {
    Piece p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(Polynomial{1.0, -0.5 * double(i), 0.25});
    return PiecewiseFunction::from_piece({Kind::vector, n}, 0.0, 1.0, std::move(p));
}

TaggedDivision division(const PiecewiseFunction& F, const PiecewiseFunction& g, int level) {
    return cousin_partition(oracle_gauge(F, g, level), 0.0, 1.0, {.policy = TagPolicy::midpoint_first});
}

template <Value (*Sum)(const PiecewiseFunction&, const PiecewiseFunction&, const TaggedDivision&)>
void BM_rs_sum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PiecewiseFunction F = integrator(n);
    const PiecewiseFunction g = integrand(n);
    const TaggedDivision p = division(F, g, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(Sum(F, g, p));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}

template <double (*Sum)(const PiecewiseFunction&, std::span<const double>)>
void BM_division_sum(benchmark::State& state) {
    const PiecewiseFunction f = integrand(3);
    std::vector<double> pts(static_cast<std::size_t>(state.range(0)) + 1);
    for (std::size_t j = 0; j < pts.size(); ++j) pts[j] = double(j) / double(pts.size() - 1);
    for (auto _ : state) benchmark::DoNotOptimize(Sum(f, pts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

const std::vector<std::vector<std::int64_t>> kShapes{{1, 3}, {12, 16}};

}  // namespace

BENCHMARK(BM_rs_sum<kernels::serial::rs_sum_dFg>)->Name("rs_sum_dFg/serial")->ArgsProduct(kShapes);
BENCHMARK(BM_rs_sum<kernels::rs_sum_dFg>)->Name("rs_sum_dFg/omp")->ArgsProduct(kShapes);
BENCHMARK(BM_rs_sum<kernels::serial::rs_sum_Fdg>)->Name("rs_sum_Fdg/serial")->ArgsProduct(kShapes);
BENCHMARK(BM_rs_sum<kernels::rs_sum_Fdg>)->Name("rs_sum_Fdg/omp")->ArgsProduct(kShapes);
BENCHMARK(BM_division_sum<kernels::serial::division_sum>)->Name("division_sum/serial")->Range(1 << 10, 1 << 20);
BENCHMARK(BM_division_sum<kernels::division_sum>)->Name("division_sum/omp")->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();

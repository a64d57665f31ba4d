#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "polydual/cyclic_averages.hpp"
#include "polydual/dual_solver.hpp"
#include "polydual/oracle.hpp"
#include "polydual/reconstruction.hpp"
#include "polydual/two_points.hpp"

using namespace polydual;

namespace {

DistanceSpec sample_distances(int n) {
    const auto inst = random_instance(static_cast<std::uint64_t>(n), n, n);
    return distances_from(inst.point, inst.polygon);
}

void BM_SolveDual(benchmark::State& state) {
    const auto d = sample_distances(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_dual(d));
}
BENCHMARK(BM_SolveDual)->Arg(3)->Arg(12)->Arg(64);

void BM_CheckConsistency(benchmark::State& state) {
    const auto avgs = averages_from_distances(sample_distances(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(check_consistency(avgs));
}
BENCHMARK(BM_CheckConsistency)->Arg(12)->Arg(64);

void BM_ConstructDual(benchmark::State& state) {
    const auto inst = random_instance(7, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(construct_dual(inst.polygon, inst.point, 0.5));
}
BENCHMARK(BM_ConstructDual)->Arg(4)->Arg(12);

void BM_TwoPoints(benchmark::State& state) {
    const RegularPolygon a(4, {0, 0}, std::sqrt(2.0), std::numbers::pi / 4);
    const RegularPolygon b(4, {1, 0}, 1.0, std::numbers::pi / 2);
    for (auto _ : state) benchmark::DoNotOptimize(two_points(a, b));
}
BENCHMARK(BM_TwoPoints);

void BM_OracleSearch(benchmark::State& state) {
    const auto inst = random_instance(11, 5, 5);
    OracleConfig cfg;
    cfg.grid_resolution = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_second_polygon(inst.polygon, inst.point, cfg));
}
BENCHMARK(BM_OracleSearch)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

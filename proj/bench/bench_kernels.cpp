// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "tropline/builder.hpp"
#include "tropline/exits.hpp"
#include "tropline/kernels.hpp"
#include "tropline/subdivision.hpp"

using namespace tropline;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

LiftedPoints family_lifting(int delta) {
    auto t = build_family_triangulation(delta);
    std::vector<LatticePoint3> pts;
    std::vector<Rat> heights;
    for (const auto& [p, h] : t.lifting) {
        pts.push_back(p);
        heights.push_back(h);
    }
    return make_lifted_points(pts, heights);
}

void BM_UpperCells(benchmark::State& state) {
    auto lp = family_lifting(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(upper_cells(lp, exec_of(state)));
}

void BM_Dominance(benchmark::State& state) {
    int delta = static_cast<int>(state.range(1));
    auto t = build_family_triangulation(delta);
    std::vector<LatticePoint3> pts;
    std::vector<Rat> heights;
    for (const auto& [p, h] : t.lifting) {
        pts.push_back(p);
        heights.push_back(h);
    }
    auto lp = make_lifted_points(pts, heights);
    std::vector<std::vector<int>> simplices;
    for (const auto& tet : t.tetrahedra()) {
        std::vector<int> s;
        for (const auto& p : tet) s.push_back(static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin()));
        simplices.push_back(s);
    }
    for (auto _ : state) benchmark::DoNotOptimize(first_dominance_violation(lp, simplices, exec_of(state)));
}

void BM_EvenSearch(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search_even_exceptions(state.range(1), exec_of(state)));
}

void BM_Gamma2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_elementary_gamma2(exec_of(state)));
}

}  // namespace

// First argument: 0 = serial, 1 = parallel.
BENCHMARK(BM_UpperCells)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dominance)->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvenSearch)->ArgsProduct({{0, 1}, {100, 400}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gamma2)->ArgsProduct({{0, 1}, {2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include "tropgw/io.hpp"
#include "tropgw/isomorphism.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tropgw;

namespace {

const Scenario &golden() {
    static const Scenario s = load_scenario(std::string(TROPGW_SCENARIO_DIR) + "/triple_degeneration.json");
    return s;
}

IntegerMatrix random_matrix(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-50, 50);
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

void BM_abs_det(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const auto m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(abs_det(m));
}
BENCHMARK(BM_abs_det)->DenseRange(2, 8, 2);

void BM_lattice_index(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const auto m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lattice_index(m));
}
BENCHMARK(BM_lattice_index)->DenseRange(2, 8, 2);

void BM_quotient(benchmark::State &state) {
    // A pointed cone in R^n around the ray (1, ..., 1), cut by n + 2 half-spaces.
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < n; ++i) {
        IntegralVector a(n);
        a[i] = 1;
        cs.push_back({{a, Rational(static_cast<long>(i))}, false});
    }
    IntegralVector skew(n);
    for (std::size_t i = 0; i < n; ++i) skew[i] = static_cast<long>(i % 2 == 0 ? 2 : -1);
    cs.push_back({{skew, 3}, false});
    const IntegralAffinePolytope p(n, cs);
    IntegralVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(quotient(p, v));
}
BENCHMARK(BM_quotient)->DenseRange(2, 5, 1);

void BM_aut_order_parallel_edges(benchmark::State &state) {
    // k identical parallel edges: k! automorphisms.
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<InternalEdge> es;
    for (std::size_t i = 0; i < k; ++i) es.push_back({"e" + std::to_string(i), "a", "b", 1, IntegralVector{1, 0}});
    const TropicalCurve c({{"a", {0, 0}, 0}, {"b", {1, 0}, 0}}, es, {});
    for (auto _ : state) benchmark::DoNotOptimize(aut_order(c));
}
BENCHMARK(BM_aut_order_parallel_edges)->DenseRange(2, 10, 4);

void BM_glue_classes_example(benchmark::State &state) {
    const auto &s = golden();
    const auto &g = s.curves.at("gamma");
    for (auto _ : state) {
        const auto d = gluing_diagram(*s.complex, g, cut(g, midpoint_cut_points(g)));
        benchmark::DoNotOptimize(glue_classes(g, d, s.invariants.at("gamma")));
    }
}
BENCHMARK(BM_glue_classes_example);

void BM_enumerate_example(benchmark::State &state) {
    const auto &s = golden();
    EnumerationOptions o;
    o.reference = s.curves.at("gamma");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_rigid(*s.complex, *s.constraints, o));
}
BENCHMARK(BM_enumerate_example)->Unit(benchmark::kMillisecond)->Iterations(3);

} // namespace
BENCHMARK_MAIN();

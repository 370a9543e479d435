#include "fixtures.hpp"

#ifndef TROPGW_SCENARIO_DIR
#error "TROPGW_SCENARIO_DIR must point at the bundled scenarios"
#endif

namespace fixture {

const Scenario &golden() {
    static const Scenario s = load_scenario(std::string(TROPGW_SCENARIO_DIR) + "/triple_degeneration.json");
    return s;
}

const PolyhedralComplex &example_complex() { return *golden().complex; }

const TropicalCurve &gamma() { return golden().curves.at("gamma"); }

long uniform(std::mt19937_64 &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational frac(const Integer &num, const Integer &den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

IntegralAffinePolytope polytope(std::size_t dim, const std::vector<std::vector<long>> &rows, bool strict) {
    std::vector<Constraint> cs;
    for (const auto &r : rows) {
        IntegralVector a(dim);
        for (std::size_t i = 0; i < dim; ++i) a[i] = r[i];
        cs.push_back(Constraint{{a, Rational(r[dim])}, strict});
    }
    return IntegralAffinePolytope(dim, cs);
}

TropicalCurve abstract_curve(const std::vector<unsigned> &genera, const std::vector<std::pair<int, int>> &edges,
                             const std::vector<int> &ends) {
    std::vector<CurveVertex> vs;
    for (std::size_t i = 0; i < genera.size(); ++i) vs.push_back({"v" + std::to_string(i), {0, 0}, genera[i]});
    std::vector<InternalEdge> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
        es.push_back({"e" + std::to_string(i), vs[edges[i].first].id, vs[edges[i].second].id, 1, IntegralVector{0, 0}});
    std::vector<CurveEnd> ns;
    for (std::size_t i = 0; i < ends.size(); ++i)
        ns.push_back({"n" + std::to_string(i), vs[ends[i]].id, IntegralVector{0, 0}, "l" + std::to_string(i)});
    return TropicalCurve(vs, es, ns);
}

TropicalCurve random_graph(std::mt19937_64 &rng, std::size_t max_vertices) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
    std::vector<unsigned> genera(n);
    for (auto &g : genera) g = static_cast<unsigned>(uniform(rng, 0, 2));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(uniform(rng, 0, static_cast<long>(i) - 1)), static_cast<int>(i));
    const long extra = uniform(rng, 0, 3);
    for (long k = 0; k < extra; ++k) {
        const int a = static_cast<int>(uniform(rng, 0, static_cast<long>(n) - 1));
        const int b = uniform(rng, 0, 2) == 0 ? a : static_cast<int>(uniform(rng, 0, static_cast<long>(n) - 1));
        edges.emplace_back(a, b);
    }
    std::vector<int> ends;
    const long m = uniform(rng, 0, 5);
    for (long k = 0; k < m; ++k) ends.push_back(static_cast<int>(uniform(rng, 0, static_cast<long>(n) - 1)));
    return abstract_curve(genera, edges, ends);
}

namespace {

// Grid points (a/4, b/4) with a, b >= -4 and a + b <= 4: the closed triangle.
RationalPoint random_grid_point(std::mt19937_64 &rng) {
    while (true) {
        const long a = uniform(rng, -4, 8), b = uniform(rng, -4, 8);
        if (a + b <= 4) return {frac(a, 4), frac(b, 4)};
    }
}

InternalEdge edge_between(std::mt19937_64 &rng, const std::string &id, const CurveVertex &t, const CurveVertex &h) {
    // Displacement 4 (h - t) is integral; split it into multiplicity and length.
    const Rational dx = 4 * (h.position[0] - t.position[0]), dy = 4 * (h.position[1] - t.position[1]);
    const IntegralVector w(std::vector<Integer>{dx.get_num(), dy.get_num()});
    if (w.is_zero()) return {id, t.id, h.id, frac(uniform(rng, 1, 4), 4), IntegralVector{0, 0}};
    const Integer c = content(w);
    const long m = uniform(rng, 1, 3);
    return {id, t.id, h.id, frac(c, 4 * m), primitive(w) * Integer(m)};
}

} // namespace

TropicalCurve random_triangle_curve(std::mt19937_64 &rng) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    std::vector<CurveVertex> vs;
    for (std::size_t i = 0; i < n; ++i)
        vs.push_back({"v" + std::to_string(i), random_grid_point(rng), static_cast<unsigned>(uniform(rng, 0, 1))});
    std::vector<InternalEdge> es;
    for (std::size_t i = 1; i < n; ++i) {
        const auto p = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(i) - 1));
        if (uniform(rng, 0, 1) == 0) es.push_back(edge_between(rng, "e" + std::to_string(i), vs[p], vs[i]));
        else es.push_back(edge_between(rng, "e" + std::to_string(i), vs[i], vs[p]));
    }
    switch (uniform(rng, 0, 2)) {
    case 1:
        if (n >= 2) {
            const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
            auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
            if (b >= a) ++b;
            es.push_back(edge_between(rng, "cycle", vs[a], vs[b]));
        }
        break;
    case 2: {
        const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        es.push_back({"loop", vs[a].id, vs[a].id, Rational(uniform(rng, 1, 4)), IntegralVector{0, 0}});
        break;
    }
    default:
        break;
    }
    std::vector<CurveEnd> ends;
    const long m = uniform(rng, 0, 4);
    for (long k = 0; k < m; ++k) {
        const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        ends.push_back({"x" + std::to_string(k), vs[v].id, IntegralVector{0, 0}, "label" + std::to_string(k)});
    }
    return TropicalCurve(vs, es, ends);
}

std::map<std::string, Rational> random_cut_points(std::mt19937_64 &rng, const TropicalCurve &c) {
    std::map<std::string, Rational> t;
    for (const auto &e : c.internal_edges()) {
        const long k = uniform(rng, 1, 9);
        t[e.id] = e.length * frac(k, 10);
    }
    for (const auto &e : c.ends()) t[e.id] = frac(uniform(rng, 1, 7), uniform(rng, 1, 3));
    return t;
}

} // namespace fixture

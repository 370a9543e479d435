#include "fixtures.hpp"
#include "oracles.hpp"

#include "tropgw/errors.hpp"
#include "tropgw/polytope.hpp"

#include <doctest.h>

using namespace tropgw;
using fixture::polytope;

namespace {

const auto quadrant = [] { return polytope(2, {{1, 0, 0}, {0, 1, 0}}); };
const auto triangle = [] { return polytope(2, {{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}}); };

bool covers(const std::vector<Stratum> &ss, const std::vector<std::size_t> &active) {
    for (const auto &s : ss)
        if (s.active == active) return true;
    return false;
}

} // namespace

TEST_CASE("empty polytopes are rejected") {
    CHECK_THROWS_AS(polytope(1, {{1, -2}, {-1, 1}}), Error);
    CHECK_THROWS_AS(polytope(1, {{1, 0}, {-1, 0}}, true), Error);
    CHECK_FALSE(IntegralAffinePolytope::make_if_nonempty(1, {Constraint{{IntegralVector{0}, -1}, false}}).has_value());
    CHECK(polytope(1, {{1, 0}, {-1, 0}}).contains({0}));
}

TEST_CASE("strata of small polytopes") {
    const auto q = strata(quadrant());
    CHECK(q.size() == 4);
    CHECK(covers(q, {}));
    CHECK(covers(q, {0}));
    CHECK(covers(q, {1}));
    CHECK(covers(q, {0, 1}));
    CHECK(strata(IntegralAffinePolytope::whole_space(2)).size() == 1);
    const auto t = strata(triangle());
    CHECK(t.size() == 7);
    std::size_t vertices = 0;
    for (const auto &s : t) vertices += s.dimension == 0;
    CHECK(vertices == 3);
}

TEST_CASE("strata partition every sample point") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(fixture::uniform(rng, 1, 3));
        std::vector<std::vector<long>> rows;
        const long m = fixture::uniform(rng, 0, 4);
        for (long k = 0; k < m; ++k) {
            std::vector<long> r;
            for (std::size_t i = 0; i < n; ++i) r.push_back(fixture::uniform(rng, -2, 2));
            r.push_back(fixture::uniform(rng, 0, 3)); // origin always inside
            rows.push_back(r);
        }
        const auto p = polytope(n, rows);
        const auto ss = strata(p);
        for (int s = 0; s < 40; ++s) {
            RationalPoint x(n);
            for (auto &c : x) c = fixture::frac(fixture::uniform(rng, -8, 8), 2);
            if (!p.contains(x)) continue;
            std::size_t hits = 0;
            for (const auto &st : ss) {
                bool in = true;
                for (std::size_t i = 0; i < p.constraints().size(); ++i) {
                    const bool active = std::find(st.active.begin(), st.active.end(), i) != st.active.end();
                    const Rational val = p.constraints()[i].functional(x);
                    in = in && (active ? val == 0 : val > 0);
                }
                hits += in;
            }
            CHECK(hits == 1);
            CHECK(covers(ss, active_set(p, x)));
        }
        for (const auto &st : ss) {
            CHECK(p.contains(st.witness));
            CHECK(active_set(p, st.witness) == st.active);
        }
    }
}

TEST_CASE("P_v examples") {
    const auto q1 = strata_union_tangent(quadrant(), IntegralVector{1, 1});
    CHECK(q1.contains({1, 1}));
    CHECK_FALSE(q1.contains({0, 1}));
    CHECK_FALSE(q1.contains({0, 0}));
    CHECK(strata_union_tangent(quadrant(), IntegralVector{0, 0}) == quadrant());
    const auto half = polytope(2, {{1, 0, 0}});
    const auto hv = strata_union_tangent(half, IntegralVector{0, 1});
    CHECK(hv.contains({0, 5}));
    CHECK_FALSE(hv.constraints()[0].strict);
}

TEST_CASE("infinite rays") {
    CHECK(spans_infinite_ray(quadrant(), {1, 1}, IntegralVector{1, 1}));
    CHECK_FALSE(spans_infinite_ray(quadrant(), {1, 1}, IntegralVector{-1, 0}));
    for (const auto &v : {IntegralVector{1, 0}, IntegralVector{-1, -1}, IntegralVector{2, -1}})
        CHECK_FALSE(spans_infinite_ray(triangle(), {0, 0}, v));
    CHECK_THROWS_AS(spans_infinite_ray(quadrant(), {-1, 0}, IntegralVector{1, 1}), Error);
}

TEST_CASE("quotient examples") {
    const auto a = quotient(quadrant(), IntegralVector{1, 1});
    CHECK(a.polytope.ambient_dim() == 1);
    CHECK(a.polytope.constraints().empty());

    const auto half = polytope(2, {{1, 0, 0}});
    const auto b = quotient(half, IntegralVector{0, 1});
    REQUIRE(b.polytope.ambient_dim() == 1);
    REQUIRE(b.polytope.constraints().size() == 1);
    // The image is a closed half-line: exactly one of y >= 0, y <= 0.
    const bool up = b.polytope.contains({1});
    CHECK(b.polytope.contains({0}));
    CHECK(b.polytope.contains({up ? 5 : -5}) != b.polytope.contains({up ? -5 : 5}));
    CHECK(b.polytope.is_complete());

    const auto c = quotient(IntegralAffinePolytope::whole_space(3), IntegralVector{2, 3, 5});
    CHECK(c.polytope.ambient_dim() == 2);
    CHECK(c.polytope.constraints().empty());

    CHECK_THROWS_AS(quotient(quadrant(), IntegralVector{0, 0}), Error);
    CHECK_THROWS_AS(quotient(triangle(), IntegralVector{1, 0}), Error);
}

TEST_CASE("quotient matches the line-search projection oracle") {
    std::mt19937_64 rng(22);
    int done = 0;
    while (done < 60) {
        const auto n = static_cast<std::size_t>(fixture::uniform(rng, 2, 4));
        IntegralVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = fixture::uniform(rng, -2, 2);
        if (v.is_zero()) continue;
        std::vector<std::vector<long>> rows;
        const long m = fixture::uniform(rng, 1, 6);
        for (long k = 0; k < m; ++k) {
            std::vector<long> r;
            for (std::size_t i = 0; i < n; ++i) r.push_back(fixture::uniform(rng, -2, 2));
            r.push_back(fixture::uniform(rng, 0, 2));
            rows.push_back(r);
        }
        const auto p = polytope(n, rows);
        if (!recedes_along(p, v)) continue;
        const auto q = quotient(p, v);
        ++done;
        CHECK(q.polytope.is_complete());
        for (int s = 0; s < 200; ++s) {
            RationalPoint y(n - 1);
            for (auto &c : y) c = fixture::frac(fixture::uniform(rng, -9, 9), fixture::uniform(rng, 1, 3));
            CHECK(q.polytope.contains(y) == oracle::in_projection(strata_union_tangent(p, v), primitive(v), q.section, y));
        }
    }
}

TEST_CASE("one-variable Fourier-Motzkin oracle agrees with find_point") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<oracle::Row> rows;
        std::vector<LinearCondition> conds;
        const long m = fixture::uniform(rng, 1, 5);
        for (long k = 0; k < m; ++k) {
            oracle::Row r{{Rational(fixture::uniform(rng, -3, 3)), Rational(fixture::uniform(rng, -3, 3))},
                          Rational(fixture::uniform(rng, -3, 3)), fixture::uniform(rng, 0, 1) == 1};
            rows.push_back(r);
            conds.push_back(LinearCondition{r.a, r.c, r.strict ? Relation::Greater : Relation::GreaterEqual});
        }
        // Feasible iff the projection to the second variable is a nonempty
        // interval; eliminate again and look at the constant rows.
        const auto one = oracle::eliminate_first(rows);
        const auto zero = oracle::eliminate_first(one);
        const bool expected = oracle::satisfies(zero, {});
        const auto x = find_point(2, conds);
        CHECK(x.has_value() == expected);
        if (x) CHECK(oracle::satisfies(rows, *x));
    }
}

TEST_CASE("tangent cone at a point") {
    const auto t = triangle();
    const auto corner = tangent_cone_at(t, {-1, -1});
    CHECK(corner.contains({1, 0}));
    CHECK(corner.contains({5, 7}));
    CHECK_FALSE(corner.contains({-1, 0}));
    CHECK(tangent_cone_at(t, {0, 0}).constraints().empty());
}

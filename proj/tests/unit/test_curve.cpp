#include "fixtures.hpp"
#include "oracles.hpp"

#include "tropgw/curve.hpp"
#include "tropgw/errors.hpp"
#include "tropgw/isomorphism.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tropgw;

namespace {

TropicalCurve two_vertex(const IntegralVector &d, const Rational &length) {
    const RationalPoint head{Rational(length * Rational(d[0])), Rational(length * Rational(d[1]))};
    return TropicalCurve({{"a", {0, 0}, 0}, {"b", head, 0}}, {{"e", "a", "b", length, d}}, {});
}

bool has_issue(const ValidationReport &r, ValidationIssue::Kind k) {
    return std::any_of(r.issues.begin(), r.issues.end(), [&](const ValidationIssue &i) { return i.kind == k; });
}

} // namespace

TEST_CASE("structural checks at construction") {
    CHECK_THROWS_AS(TropicalCurve({}, {}, {}), Error);
    CHECK_THROWS_AS(TropicalCurve({{"a", {0, 0}, 0}, {"a", {0, 0}, 0}}, {}, {}), Error);
    CHECK_THROWS_AS(TropicalCurve({{"a", {0, 0}, 0}}, {{"e", "a", "z", 1, IntegralVector{0, 0}}}, {}), Error);
    CHECK_THROWS_AS(TropicalCurve({{"a", {0, 0}, 0}}, {{"e", "a", "a", 0, IntegralVector{0, 0}}}, {}), Error);
    CHECK_THROWS_AS(TropicalCurve({{"a", {0, 0}, 0}}, {}, {{"x", "a", IntegralVector{0}, "l"}}), Error);
}

TEST_CASE("validate") {
    const auto &c = fixture::example_complex();
    CHECK(validate(fixture::gamma(), c).ok());
    CHECK(validate(TropicalCurve({{"p", {0, 0}, 0}}, {}, {}), c).ok());

    // Head at (1,0) but length * derivative = (1/2, 0).
    const TropicalCurve bad({{"a", {0, 0}, 0}, {"b", {1, 0}, 0}}, {{"e", "a", "b", Rational(1, 2), IntegralVector{1, 0}}}, {});
    const auto r = validate(bad, c);
    CHECK_FALSE(r.ok());
    CHECK(has_issue(r, ValidationIssue::Kind::Displacement));

    const TropicalCurve outside({{"a", {0, 0}, 0}, {"b", {3, 0}, 0}}, {{"e", "a", "b", 3, IntegralVector{1, 0}}}, {});
    CHECK(has_issue(validate(outside, c), ValidationIssue::Kind::OutsideComplex));

    const TropicalCurve ray({{"a", {0, 0}, 0}}, {}, {{"x", "a", IntegralVector{1, 0}, "l"}});
    CHECK(has_issue(validate(ray, c), ValidationIssue::Kind::EndNotRay));

    const TropicalCurve dup({{"a", {0, 0}, 0}}, {}, {{"x", "a", IntegralVector{0, 0}, "l"}, {"y", "a", IntegralVector{0, 0}, "l"}});
    CHECK(has_issue(validate(dup, c), ValidationIssue::Kind::DuplicateLabel));

    // The central vertex of gamma balances: (-1,-1)+(2,-1)+(-1,2) = 0. Corner vertices do not.
    CHECK(validate(fixture::gamma(), c, BalancingMode::InteriorOnly).ok());
    CHECK(has_issue(validate(fixture::gamma(), c, BalancingMode::On), ValidationIssue::Kind::Balancing));
    CHECK(validate(fixture::gamma(), c, BalancingMode::Off).ok());
}

TEST_CASE("segment_in_complex is exact") {
    const auto &c = fixture::example_complex();
    CHECK(segment_in_complex(c, {-1, -1}, IntegralVector{1, 1}, 1));
    CHECK(segment_in_complex(c, {-1, -1}, IntegralVector{3, 0}, 1));
    CHECK_FALSE(segment_in_complex(c, {-1, -1}, IntegralVector{3, 0}, Rational(1001, 1000)));
    CHECK_FALSE(segment_in_complex(c, {-1, 0}, IntegralVector{-1, 0}, Rational(1, 1000000)));
}

TEST_CASE("genus") {
    CHECK(genus(fixture::gamma()) == 0);
    CHECK(genus(fixture::abstract_curve({2}, {{0, 0}}, {})) == 3); // g_v = g - 1 plus one loop
    CHECK(genus(fixture::abstract_curve({1, 2}, {{0, 1}}, {})) == 3);
    CHECK(genus(fixture::abstract_curve({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {})) == 2);
    CHECK_THROWS_AS(genus(fixture::abstract_curve({0, 0}, {}, {})), Error);
    CHECK(component_genera(fixture::abstract_curve({1, 0}, {}, {})) == std::vector<unsigned>{1, 0});
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const auto g = fixture::random_graph(rng);
        CHECK(genus(g) == oracle::genus(g));
    }
}

TEST_CASE("Euler exponent") {
    CHECK(euler_exponent(fixture::gamma()) == 6);
    CHECK(euler_exponent(fixture::abstract_curve({1}, {}, {})) == 0);
    CHECK(euler_exponent(fixture::abstract_curve({0}, {}, {0, 0, 0})) == 1);
}

TEST_CASE("k_gamma") {
    CHECK(k_gamma(fixture::gamma()) == 1);
    CHECK(k_gamma(two_vertex(IntegralVector{2, 4}, Rational(1, 8))) == 2);
    CHECK(k_gamma(fixture::abstract_curve({0, 0}, {{0, 1}}, {})) == 0);
    CHECK(k_gamma(fixture::abstract_curve({0}, {}, {0})) == 1);
}

TEST_CASE("aut_order examples") {
    CHECK(aut_order(fixture::gamma()) == 1);
    const TropicalCurve parallel({{"a", {0, 0}, 0}, {"b", {1, 0}, 0}},
                                 {{"e", "a", "b", 1, IntegralVector{1, 0}}, {"f", "a", "b", 1, IntegralVector{1, 0}}}, {});
    CHECK(aut_order(parallel) == 2);
    CHECK(oracle::brute_force_automorphisms(parallel) == 2);
    CHECK(aut_order(TropicalCurve({{"a", {0, 0}, 0}}, {}, {})) == 1);
    // Reversed copy counts too.
    const TropicalCurve reversed({{"a", {0, 0}, 0}, {"b", {1, 0}, 0}},
                                 {{"e", "a", "b", 1, IntegralVector{1, 0}}, {"f", "b", "a", 1, IntegralVector{-1, 0}}}, {});
    CHECK(aut_order(reversed) == 2);
    // Different lengths break the symmetry.
    const TropicalCurve uneven({{"a", {0, 0}, 0}, {"b", {0, 0}, 0}},
                               {{"e", "a", "b", 1, IntegralVector{0, 0}}, {"f", "a", "b", 2, IntegralVector{0, 0}}}, {});
    CHECK(aut_order(uneven) == 2); // swap a and b
    CHECK(oracle::brute_force_automorphisms(uneven) == 2);
}

TEST_CASE("aut_order agrees with brute force on random graphs") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 150; ++i) {
        const auto g = fixture::random_graph(rng, 5);
        CHECK(aut_order(g) == oracle::brute_force_automorphisms(g));
    }
    for (int i = 0; i < 150; ++i) {
        const auto g = fixture::random_triangle_curve(rng);
        CHECK(aut_order(g) == oracle::brute_force_automorphisms(g));
    }
}

TEST_CASE("cut examples") {
    const auto comps = cut(fixture::gamma(), midpoint_cut_points(fixture::gamma()));
    REQUIRE(comps.size() == 4);
    std::map<std::string, std::size_t> sizes;
    for (const auto &k : comps) sizes[k.vertex.id] = k.cut_edges.size();
    CHECK(sizes == std::map<std::string, std::size_t>{{"v0", 3}, {"v1", 4}, {"v2", 4}, {"v3", 3}});

    const TropicalCurve lone({{"a", {0, 0}, 0}}, {},
                             {{"x", "a", IntegralVector{0, 0}, "l1"}, {"y", "a", IntegralVector{0, 0}, "l2"}});
    const auto one = cut(lone, {{"x", 1}, {"y", 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0].cut_edges.size() == 2);

    const auto seg = two_vertex(IntegralVector{1, 0}, 2);
    const auto two = cut(seg, {{"e", Rational(1, 2)}});
    REQUIRE(two.size() == 2);
    CHECK(two[0].cut_edges[0].cut_length + two[1].cut_edges[0].cut_length == 2);
    const auto &a = two[0].vertex.id == "a" ? two[0] : two[1];
    CHECK(a.cut_edges[0].cut_length == Rational(1, 2));
    CHECK(a.evaluation_point(a.cut_edges[0]) == RationalPoint{Rational(1, 2), 0});

    CHECK_THROWS_AS(cut(seg, {{"e", 2}}), Error);
    CHECK_THROWS_AS(cut(seg, {}), Error);
}

TEST_CASE("glue examples") {
    CutCurveComponent left{{"a", {0, 0}, 0}, {{"l", IntegralVector{1, 0}, Rational(1, 2), "e", CutSide::Tail, ""}}};
    CutCurveComponent right{{"b", {1, 0}, 0}, {{"r", IntegralVector{-1, 0}, Rational(1, 2), "e", CutSide::Head, ""}}};
    const auto glued = glue({left, right}, {{"l", "r"}});
    CHECK(glued.vertices().size() == 2);
    REQUIRE(glued.internal_edges().size() == 1);
    CHECK(glued.internal_edges()[0].length == 1);
    CHECK(are_isomorphic(glued, two_vertex(IntegralVector{1, 0}, 1)));

    right.cut_edges[0].derivative = IntegralVector{1, 0};
    CHECK_THROWS_AS(glue({left, right}, {{"l", "r"}}), Error);
    right.cut_edges[0].derivative = IntegralVector{-1, 0};
    right.vertex.position = {2, 0};
    CHECK_THROWS_AS(glue({left, right}, {{"l", "r"}}), Error);
}

TEST_CASE("cut then glue returns an isomorphic curve") {
    const auto &c = fixture::example_complex();
    const auto &g = fixture::gamma();
    const auto comps = cut(g, midpoint_cut_points(g));
    CHECK(are_isomorphic(glue(comps, induced_matching(comps), &c), g));

    std::mt19937_64 rng(43);
    for (int i = 0; i < 150; ++i) {
        const auto curve = fixture::random_triangle_curve(rng);
        REQUIRE(validate(curve, c, BalancingMode::Off).ok());
        const auto pieces = cut(curve, fixture::random_cut_points(rng, curve));
        CHECK(pieces.size() == curve.vertices().size());
        const auto back = glue(pieces, induced_matching(pieces), &c);
        CHECK(are_isomorphic(back, curve));
        // Euler additivity over the cut components.
        if (curve.is_connected()) {
            long sum = 0;
            for (const auto &p : pieces) sum += euler_exponent(p);
            CHECK(sum == euler_exponent(curve));
        }
    }
}

TEST_CASE("star") {
    const auto &c = fixture::example_complex();
    const auto &g = fixture::gamma();
    const auto s0 = star(g, "v0", c);
    std::vector<IntegralVector> dirs;
    for (const auto &r : s0.rays) dirs.push_back(r.derivative);
    std::sort(dirs.begin(), dirs.end());
    std::vector<IntegralVector> expected{{-1, -1}, {-1, 2}, {2, -1}};
    std::sort(expected.begin(), expected.end());
    CHECK(dirs == expected);

    const auto s3 = star(g, "v3", c);
    CHECK(s3.rays.size() == 3);
    CHECK(std::count_if(s3.rays.begin(), s3.rays.end(), [](const StarRay &r) { return r.derivative.is_zero(); }) == 2);
    CHECK(s3.genus == g.vertex("v3").genus);
    CHECK(s3.as_curve().ends().size() == 3);

    const TropicalCurve lone({{"p", {0, 0}, 1}}, {}, {});
    const auto s = star(lone, "p", c);
    CHECK(s.rays.empty());
    CHECK(s.genus == 1);

    // Valence and genus are preserved for random curves.
    std::mt19937_64 rng(44);
    for (int i = 0; i < 50; ++i) {
        const auto curve = fixture::random_triangle_curve(rng);
        for (const auto &v : curve.vertices()) {
            const auto st = star(curve, v.id, c);
            CHECK(st.rays.size() == curve.valence(v.id));
            CHECK(st.genus == v.genus);
        }
    }

    // A ray leaving the complex at a corner.
    const TropicalCurve out({{"a", {-1, -1}, 0}, {"b", {-2, -1}, 0}}, {{"e", "a", "b", 1, IntegralVector{-1, 0}}}, {});
    CHECK_THROWS_AS(star(out, "a", c), Error);
}

#pragma once

#include "tropgw/io.hpp"

#include <random>
#include <string>

namespace fixture {

using namespace tropgw;

/// The bundled golden scenario.
const Scenario &golden();
const PolyhedralComplex &example_complex();
const TropicalCurve &gamma();

/// Polytope from rows {a_1, ..., a_N, c}: a . x + c >= 0.
IntegralAffinePolytope polytope(std::size_t dim, const std::vector<std::vector<long>> &rows, bool strict = false);

/// Curve with all vertices at the origin of R^2 and zero derivatives: only the
/// decorated graph matters. `edges` holds (tail, head) vertex indices and
/// `ends` the vertex of each end.
TropicalCurve abstract_curve(const std::vector<unsigned> &genera, const std::vector<std::pair<int, int>> &edges,
                             const std::vector<int> &ends);

/// Random connected decorated graph: a spanning tree plus extra edges and loops.
TropicalCurve random_graph(std::mt19937_64 &rng, std::size_t max_vertices = 7);

/// Random curve inside the example triangle on the grid (1/4) Z^2: a tree, or
/// a tree plus one cycle or one contracted loop, with zero-derivative ends.
TropicalCurve random_triangle_curve(std::mt19937_64 &rng);

/// Random cut parameters strictly inside each edge.
std::map<std::string, Rational> random_cut_points(std::mt19937_64 &rng, const TropicalCurve &c);

long uniform(std::mt19937_64 &rng, long lo, long hi);
/// Canonical num / den.
Rational frac(const Integer &num, const Integer &den);

} // namespace fixture

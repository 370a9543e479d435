#pragma once

// Independent reference computations used to cross-check the library.

#include "tropgw/curve.hpp"
#include "tropgw/lattice.hpp"
#include "tropgw/polytope.hpp"

#include <optional>
#include <random>
#include <vector>

namespace oracle {

using tropgw::Integer;
using tropgw::Rational;

/// Determinant by Gaussian elimination over Q.
Rational gaussian_det(const tropgw::IntegerMatrix &m);

/// [Z^k : M Z^k] by counting integer points in the half-open fundamental
/// parallelepiped of M. Only for small matrices.
Integer parallelepiped_index(const tropgw::IntegerMatrix &m);

/// Whether y lies in the projection of P_v: searches the line
/// section * y + t v for a t satisfying every constraint of P_v.
bool in_projection(const tropgw::IntegralAffinePolytope &p, const tropgw::IntegralVector &v,
                   const tropgw::IntegerMatrix &section, const tropgw::RationalPoint &y);

/// Fourier-Motzkin elimination of the first variable from
/// a . x + c (>= or >) 0 constraints; returns constraints on the rest.
struct Row {
    std::vector<Rational> a;
    Rational c;
    bool strict = false;
};
std::vector<Row> eliminate_first(const std::vector<Row> &rows);
bool satisfies(const std::vector<Row> &rows, const std::vector<Rational> &x);

/// Automorphism count by trying every vertex permutation and, for each, every
/// assignment of edges to edges with orientation, end labels fixed.
Integer brute_force_automorphisms(const tropgw::TropicalCurve &c);

/// Genus from first principles: b_1 + sum of vertex genera.
unsigned genus(const tropgw::TropicalCurve &c);

/// Brute-force rank over Q.
std::size_t rank(std::vector<std::vector<Rational>> rows);

} // namespace oracle

#pragma once

#include "tropgw/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropgw::cli {

/// Vertices of a planar face, counter-clockwise. Unbounded faces are clipped
/// to the box |x|, |y| <= bound.
std::vector<RationalPoint> face_outline(const IntegralAffinePolytope &p, const Rational &bound);

/// Static SVG drawing of a planar complex and, optionally, a curve in it.
/// Throws Diagram for complexes that are not planar.
std::string render_svg(const PolyhedralComplex &complex, const TropicalCurve *curve);

} // namespace tropgw::cli

#pragma once

#include "tropgw/curve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropgw {

/// A marked point near a face of a two-dimensional complex. Its position in
/// the plane of the enumeration is scale * position + offset: the complex
/// is the coarse picture, `offset` the generic position inside the face's
/// tropical completion.
struct ConstraintPoint {
    FaceId face;
    RationalPoint position;
    RationalPoint offset;
    std::string label; ///< empty for a wildcard
};

struct ConstraintSet {
    std::vector<ConstraintPoint> points;
    long degree_bound = 1; ///< bound on every entry of every edge derivative
    std::map<FaceId, std::size_t> end_distribution;
    /// Directions of the unbounded ends; each carries the same number of
    /// weight-one ends. Empty means (-1,0), (0,-1), (1,1).
    std::vector<IntegralVector> end_fan;
    Integer scale = Integer("1000000");
};

/// Checks positions against faces and the end distribution. Throws Validation.
void check_constraints(const PolyhedralComplex &complex, const ConstraintSet &constraints);

struct RigidCurveRecord {
    std::string encoding;   ///< canonical combinatorial type
    TropicalCurve curve;    ///< solved curve in the plane
    Integer multiplicity;
    bool rigid = false;     ///< positions determined by type and points
    Integer max_entry;      ///< largest derivative entry
    /// Limit of curve / scale as the scale grows: zero-length edges
    /// contracted, unbounded ends dropped, straight 2-valent vertices smoothed.
    std::optional<TropicalCurve> coarse;
    bool coarse_in_complex = false;
    bool matches_reference = false; ///< coarse curve isomorphic to the reference
};

struct EnumerationOptions {
    std::size_t budget = 2'000'000; ///< maximal number of partial pieces
    /// Curve whose tropical type is reported through matches_reference.
    std::optional<TropicalCurve> reference;
};

struct EnumerationResult {
    std::vector<RigidCurveRecord> records; ///< sorted by encoding
    Integer total_multiplicity = 0;
    Integer reference_multiplicity = 0;
    std::size_t class_degree = 0; ///< ends per fan direction
    std::size_t pieces = 0;
    std::vector<std::string> warnings;
};

/// Rigid genus-0 plane tropical curves through the constraint points with
/// `class_degree` weight-one ends in each fan direction. Throws Budget when the
/// search exceeds options.budget and Precondition for a complex that is not
/// two-dimensional.
EnumerationResult enumerate_rigid(const PolyhedralComplex &complex, const ConstraintSet &constraints,
                                  const EnumerationOptions &options = {});

/// Canonical string for the combinatorial type of a tree, rooted at `root`.
std::string type_encoding(const TropicalCurve &curve, const std::string &root);

/// Rank of the linear system in the vertex positions: two equations per
/// vertex in `fixed`, one per internal edge keeping its direction.
std::size_t rigidity_rank(const TropicalCurve &curve, const std::vector<std::string> &fixed);

} // namespace tropgw

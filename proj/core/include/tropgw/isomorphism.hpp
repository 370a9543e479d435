#pragma once

#include "tropgw/curve.hpp"

namespace tropgw {

struct IsomorphismOptions {
    bool compare_positions = true;
    bool compare_lengths = true;
    /// Ends must map to ends with the same label; otherwise ends are matched
    /// by derivative only.
    bool match_end_labels = true;
};

/// Number of decorated-graph isomorphisms a -> b: vertex bijections preserving
/// genus (and position), times the ways to match the edges between each pair
/// of vertices. Loops with zero derivative may be flipped.
Integer count_isomorphisms(const TropicalCurve &a, const TropicalCurve &b, const IsomorphismOptions &options = {});

bool are_isomorphic(const TropicalCurve &a, const TropicalCurve &b, const IsomorphismOptions &options = {});

} // namespace tropgw

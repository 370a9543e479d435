#pragma once

#include "tropgw/evalspace.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropgw {

/// Formal integer combination of named energy symbols.
using EnergyExponent = std::map<std::string, Integer>;

std::string to_string(const EnergyExponent &q);

/// Poincare dual of a product of torus quotient maps: one integer covector of
/// length `rank` per internal edge.
struct ToricDatum {
    std::size_t rank = 0;
    std::map<std::string, IntegralVector> weight_rows;
    friend bool operator==(const ToricDatum &, const ToricDatum &) = default;
};

struct GWClass {
    Rational coefficient = 1;
    EnergyExponent q_exponent;
    long hbar_exponent = 0;
    long degree = 0; ///< cohomological degree
    std::optional<ToricDatum> toric;
    /// Internal edges whose torus factor carries a degree-2 generator.
    std::set<std::string> fiber_generators;

    bool is_zero() const { return coefficient == 0; }
    friend bool operator==(const GWClass &, const GWClass &) = default;
};

/// Throws Validation for negative or odd degree or malformed toric rows.
void check_class(const GWClass &c);

struct VertexInvariant {
    std::string vertex;
    GWClass cls;
    long euler_check = 0; ///< expected 2 g_v - 2 + n_v
};

struct GluingResult {
    GWClass cls;
    Integer k_gamma;
    Integer aut_order;
    Integer lattice_factor;     ///< L
    long degree_sum = 0;        ///< sum of vertex degrees plus shift
    long forgotten_dimension = 0;
};

/// The gluing formula in the toric regime. Throws DegreeMismatch,
/// UnsupportedRegime, Bookkeeping or Precondition.
GluingResult glue_classes_detailed(const TropicalCurve &curve, const GluingDiagram &diagram,
                                   const std::vector<VertexInvariant> &invariants, long descendant_degree_shift = 0);

inline GWClass glue_classes(const TropicalCurve &curve, const GluingDiagram &diagram,
                            const std::vector<VertexInvariant> &invariants, long descendant_degree_shift = 0) {
    return glue_classes_detailed(curve, diagram, invariants, descendant_degree_shift).cls;
}

/// Cohomological degree of the top Chern class of a rank-r complex bundle.
long chern_shift(long rank);

struct LedgerVertex {
    std::string vertex;
    unsigned genus = 0;
    std::size_t valence = 0;
    long expected = 0;              ///< 2 g_v - 2 + n_v
    std::optional<long> hbar;       ///< from the supplied invariant
};

struct LedgerEdge {
    std::string edge;
    bool separating = false;
    bool loop = false;
};

struct LedgerReport {
    std::vector<LedgerVertex> vertices;
    std::vector<LedgerEdge> edges;
    long total = 0;    ///< sum over vertices
    long expected = 0; ///< 2 g - 2 + n of the curve
    bool genus_reduction = false; ///< some edge is non-separating
    bool splitting = false;       ///< some edge is separating
};

/// Per-vertex Euler bookkeeping of a connected curve. With invariants, each
/// hbar exponent must match its vertex. Throws Ledger on mismatch.
LedgerReport euler_ledger(const TropicalCurve &curve, const std::vector<VertexInvariant> &invariants = {});

} // namespace tropgw

#pragma once

#include "tropgw/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropgw {

/// Which evaluation target a component belongs to. They differ only for
/// v = 0, where End divides by the trivial torus action.
enum class EvaluationTarget { REnd, End };

struct Stabilizer {
    enum class Kind { Trivial, Torus, Cyclic } kind = Kind::Trivial;
    Integer order = 1; ///< for Cyclic
    friend bool operator==(const Stabilizer &, const Stabilizer &) = default;
};

std::string to_string(const Stabilizer &s);

struct EvaluationComponent {
    enum class Kind { Full, RayQuotient } kind;
    FaceId face;
    IntegralVector direction;        ///< zero for Full
    IntegralAffinePolytope polytope; ///< P for Full, P/v for RayQuotient
    Stabilizer stabilizer;
    long real_dimension = 0;
    /// Quotient coordinates, present for RayQuotient.
    std::optional<QuotientResult> quotient;

    /// Stable id "face|direction".
    std::string id() const;
    /// Rank of the lattice the component lives in.
    std::size_t rank() const { return polytope.ambient_dim(); }
};

/// Component of the evaluation target over `polytope` (a face or a cone over
/// it) for ends of direction v. Throws NoComponent when v != 0 spans no
/// infinite ray.
EvaluationComponent end_component(const IntegralAffinePolytope &polytope, const FaceId &face,
                                  std::size_t chart_real_dim, const IntegralVector &v,
                                  EvaluationTarget target = EvaluationTarget::End);

/// Component over the tropical completion of a face of the complex, or over
/// its tangent cone at `at` when given.
EvaluationComponent end_component(const PolyhedralComplex &complex, const FaceId &face, const IntegralVector &v,
                                  EvaluationTarget target = EvaluationTarget::End,
                                  const std::optional<RationalPoint> &at = std::nullopt);

/// The component an edge germ at `point` with direction v evaluates to: over
/// the minimal face containing `point`, completed there.
EvaluationComponent component_at(const PolyhedralComplex &complex, const RationalPoint &point, const IntegralVector &v,
                                 EvaluationTarget target);

struct EdgeComponent {
    std::string edge; ///< internal edge or end id
    bool internal = false;
    EvaluationComponent component;
};

/// One component per internal edge (at its midpoint, direction tail -> head)
/// followed by one per end (at parameter 1 along it).
std::vector<EdgeComponent> rend_gamma(const PolyhedralComplex &complex, const TropicalCurve &curve,
                                      EvaluationTarget target = EvaluationTarget::REnd);

/// Checks that the components for v and -v over the same face agree after the
/// canonical change of quotient coordinates. Returns the change-of-basis
/// matrix from v-coordinates to (-v)-coordinates.
IntegerMatrix identification(const EvaluationComponent &forward, const EvaluationComponent &backward);

struct DiagonalPair {
    std::string edge;
    std::string tail_cut;
    std::string head_cut;
    EvaluationComponent tail_side;
    EvaluationComponent head_side;
    IntegerMatrix identification;
};

struct OutputFactor {
    std::size_t position = 0;
    std::string end;
    std::string label;
    EvaluationComponent component;
};

struct GluingDiagram {
    std::vector<DiagonalPair> diagonal;   ///< identified by Delta, one per internal edge
    std::vector<OutputFactor> outputs;    ///< one per end, in label order
    std::vector<std::string> forgotten;   ///< internal edges forgotten by i
    long diagonal_real_dimension = 0;     ///< real dimension of the diagonal
    long forgotten_real_dimension = 0;    ///< fiber real dimension of i
};

/// Builds the diagram from cut components of the curve (from cut()). Throws
/// Diagram when the two sides of an internal edge do not match.
GluingDiagram gluing_diagram(const PolyhedralComplex &complex, const TropicalCurve &curve,
                             const std::vector<CutCurveComponent> &components);

} // namespace tropgw

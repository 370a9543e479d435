#pragma once

#include "tropgw/complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropgw {

struct CurveVertex {
    std::string id;
    RationalPoint position;
    unsigned genus = 0;
    friend bool operator==(const CurveVertex &, const CurveVertex &) = default;
};

/// Parameterized by [0, length]; head = tail + length * derivative.
struct InternalEdge {
    std::string id;
    std::string tail;
    std::string head;
    Rational length;
    IntegralVector derivative;
    friend bool operator==(const InternalEdge &, const InternalEdge &) = default;
};

/// Semi-infinite edge leaving `vertex` along `derivative`.
struct CurveEnd {
    std::string id;
    std::string vertex;
    IntegralVector derivative;
    std::string label;
    friend bool operator==(const CurveEnd &, const CurveEnd &) = default;
};

/// One edge or end seen from a vertex, oriented away from it.
struct Incidence {
    enum class Kind { Internal, End } kind;
    std::size_t index;       ///< into internal_edges() or ends()
    IntegralVector outgoing; ///< derivative pointing away from the vertex
};

/// A decorated metric graph mapped into R^N. Construction checks only the
/// combinatorial structure (ids, references, dimensions, positive lengths)
/// and throws Validation; geometric conditions are checked by validate().
class TropicalCurve {
  public:
    TropicalCurve(std::vector<CurveVertex> vertices, std::vector<InternalEdge> edges, std::vector<CurveEnd> ends);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<CurveVertex> &vertices() const noexcept { return vertices_; }
    const std::vector<InternalEdge> &internal_edges() const noexcept { return edges_; }
    const std::vector<CurveEnd> &ends() const noexcept { return ends_; }

    std::size_t vertex_index(const std::string &id) const;
    const CurveVertex &vertex(const std::string &id) const { return vertices_[vertex_index(id)]; }
    std::optional<std::size_t> edge_index(const std::string &id) const;
    std::optional<std::size_t> end_index(const std::string &id) const;

    /// Edges and ends at a vertex, loops listed twice (once per direction).
    std::vector<Incidence> incidences(const std::string &vertex_id) const;
    /// Number of edge and end germs at a vertex.
    std::size_t valence(const std::string &vertex_id) const { return incidences(vertex_id).size(); }

    /// Vertex index sets of the connected components, in order of first vertex.
    std::vector<std::vector<std::size_t>> connected_components() const;
    bool is_connected() const { return connected_components().size() == 1; }

    friend bool operator==(const TropicalCurve &, const TropicalCurve &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<CurveVertex> vertices_;
    std::vector<InternalEdge> edges_;
    std::vector<CurveEnd> ends_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> edge_index_;
    std::map<std::string, std::size_t> end_index_;
};

enum class BalancingMode { Off, On, InteriorOnly };

struct ValidationIssue {
    enum class Kind { Displacement, OutsideComplex, EndNotRay, DuplicateLabel, Balancing } kind;
    std::string subject; ///< edge, end or vertex id
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const noexcept { return issues.empty(); }
};

std::string_view issue_name(ValidationIssue::Kind kind) noexcept;

ValidationReport validate(const TropicalCurve &curve, const PolyhedralComplex &complex,
                          BalancingMode balancing = BalancingMode::InteriorOnly);

/// Parameters t in [0, length] where tail + t * derivative lies in the complex
/// are exactly [0, length]. Exact: checks every face-boundary crossing and the
/// open intervals between them.
bool segment_in_complex(const PolyhedralComplex &complex, const RationalPoint &start, const IntegralVector &direction,
                        const Rational &length);

/// Genus of a connected curve; throws Precondition when disconnected.
unsigned genus(const TropicalCurve &curve);
/// Genus per connected component.
std::vector<unsigned> component_genera(const TropicalCurve &curve);
/// 2 genus - 2 + #ends; throws Precondition when disconnected.
long euler_exponent(const TropicalCurve &curve);

/// Product of contents of the internal-edge derivatives.
Integer k_gamma(const TropicalCurve &curve);
/// Automorphisms fixing every end label, vertex position, genus, edge length
/// and derivative (edges may be reversed together with their derivative).
Integer aut_order(const TropicalCurve &curve);

enum class CutSide { Tail, Head, End };

struct CutEdge {
    std::string id;
    IntegralVector derivative; ///< pointing away from the component's vertex
    Rational cut_length;
    std::string source;        ///< edge or end id in the parent curve
    CutSide side;
    std::string label;         ///< end label when side == End
    friend bool operator==(const CutEdge &, const CutEdge &) = default;
};

/// With a cut point on every edge, each component is a single vertex with
/// finite cut edges.
struct CutCurveComponent {
    CurveVertex vertex;
    std::vector<CutEdge> cut_edges;

    /// vertex position + cut_length * derivative
    RationalPoint evaluation_point(const CutEdge &e) const;
    const CutEdge &cut_edge(const std::string &id) const;
    friend bool operator==(const CutCurveComponent &, const CutCurveComponent &) = default;
};

/// 2 g_v - 2 + n_v with n_v = number of cut edges.
long euler_exponent(const CutCurveComponent &component);

/// `cut_points` maps every internal-edge and end id to a parameter t, with
/// 0 < t < length on internal edges and t > 0 on ends. Throws Precondition.
std::vector<CutCurveComponent> cut(const TropicalCurve &curve, const std::map<std::string, Rational> &cut_points);

/// Midpoint of every internal edge and parameter 1 on every end.
std::map<std::string, Rational> midpoint_cut_points(const TropicalCurve &curve);

using CutMatching = std::vector<std::pair<std::string, std::string>>;

/// Pairs the tail-side and head-side pieces of each internal edge.
CutMatching induced_matching(const std::vector<CutCurveComponent> &components);

/// Inverse of cut. Matched cut edges must have coinciding evaluation points and
/// opposite derivatives; unmatched ones become ends and, when `complex` is
/// given, must span an infinite ray in it. Throws Gluing.
TropicalCurve glue(const std::vector<CutCurveComponent> &components, const CutMatching &matching,
                   const PolyhedralComplex *complex = nullptr);

struct StarRay {
    std::string id;
    IntegralVector derivative;
    std::string source; ///< edge or end id in the parent curve
};

/// A single vertex at the apex of the tangent cone, with one ray per germ.
struct StarCurve {
    std::string vertex_id;
    unsigned genus = 0;
    Fan fan;
    std::vector<StarRay> rays;

    /// The star as a one-vertex curve at the origin, rays as ends labelled by id.
    TropicalCurve as_curve() const;
};

/// Throws Inconsistency when a ray leaves the tangent cone.
StarCurve star(const TropicalCurve &curve, const std::string &vertex_id, const PolyhedralComplex &complex);

} // namespace tropgw

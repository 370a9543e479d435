#include "tropgw/curve.hpp"

#include "tropgw/errors.hpp"
#include "tropgw/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropgw {

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

TropicalCurve::TropicalCurve(std::vector<CurveVertex> vertices, std::vector<InternalEdge> edges,
                             std::vector<CurveEnd> ends)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), ends_(std::move(ends)) {
    if (vertices_.empty()) fail(ErrorCategory::Validation, "a curve needs at least one vertex");
    dim_ = vertices_.front().position.size();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto &v = vertices_[i];
        if (v.position.size() != dim_) fail(ErrorCategory::Validation, "vertex '" + v.id + "' has the wrong dimension");
        if (!vertex_index_.emplace(v.id, i).second) fail(ErrorCategory::Validation, "duplicate vertex id '" + v.id + "'");
    }
    std::set<std::string> edge_ids;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto &e = edges_[i];
        if (!edge_ids.insert(e.id).second) fail(ErrorCategory::Validation, "duplicate edge id '" + e.id + "'");
        if (!vertex_index_.contains(e.tail) || !vertex_index_.contains(e.head))
            fail(ErrorCategory::Validation, "edge '" + e.id + "' references an unknown vertex");
        if (e.length <= 0) fail(ErrorCategory::Validation, "edge '" + e.id + "' has nonpositive length");
        if (e.derivative.dim() != dim_) fail(ErrorCategory::Validation, "edge '" + e.id + "' has the wrong dimension");
        edge_index_.emplace(e.id, i);
    }
    for (std::size_t i = 0; i < ends_.size(); ++i) {
        const auto &e = ends_[i];
        if (!edge_ids.insert(e.id).second) fail(ErrorCategory::Validation, "duplicate edge id '" + e.id + "'");
        if (!vertex_index_.contains(e.vertex))
            fail(ErrorCategory::Validation, "end '" + e.id + "' references an unknown vertex");
        if (e.derivative.dim() != dim_) fail(ErrorCategory::Validation, "end '" + e.id + "' has the wrong dimension");
        end_index_.emplace(e.id, i);
    }
}

std::size_t TropicalCurve::vertex_index(const std::string &id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) fail(ErrorCategory::Precondition, "unknown vertex '" + id + "'");
    return it->second;
}

std::optional<std::size_t> TropicalCurve::edge_index(const std::string &id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> TropicalCurve::end_index(const std::string &id) const {
    auto it = end_index_.find(id);
    if (it == end_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Incidence> TropicalCurve::incidences(const std::string &vertex_id) const {
    vertex_index(vertex_id);
    std::vector<Incidence> out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].tail == vertex_id) out.push_back({Incidence::Kind::Internal, i, edges_[i].derivative});
        if (edges_[i].head == vertex_id) out.push_back({Incidence::Kind::Internal, i, -edges_[i].derivative});
    }
    for (std::size_t i = 0; i < ends_.size(); ++i)
        if (ends_[i].vertex == vertex_id) out.push_back({Incidence::Kind::End, i, ends_[i].derivative});
    return out;
}

std::vector<std::vector<std::size_t>> TropicalCurve::connected_components() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &e : edges_) {
        const std::size_t a = find_root(parent, vertex_index_.at(e.tail));
        const std::size_t b = find_root(parent, vertex_index_.at(e.head));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < vertices_.size(); ++i) groups[find_root(parent, i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto &[root, members] : groups) out.push_back(std::move(members));
    return out;
}

std::string_view issue_name(ValidationIssue::Kind kind) noexcept {
    switch (kind) {
    case ValidationIssue::Kind::Displacement: return "displacement";
    case ValidationIssue::Kind::OutsideComplex: return "outside-complex";
    case ValidationIssue::Kind::EndNotRay: return "end-not-ray";
    case ValidationIssue::Kind::DuplicateLabel: return "duplicate-label";
    case ValidationIssue::Kind::Balancing: return "balancing";
    }
    return "unknown";
}

bool segment_in_complex(const PolyhedralComplex &complex, const RationalPoint &start, const IntegralVector &direction,
                        const Rational &length) {
    std::vector<Rational> breaks{Rational(0), length};
    for (const auto &f : complex.faces())
        for (const auto &c : f.polytope.constraints()) {
            const Rational alpha = c.functional(start);
            const Rational beta(c.functional.linear.dot(direction));
            if (beta == 0) continue;
            const Rational t = -alpha / beta;
            if (t > 0 && t < length) breaks.push_back(t);
        }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    auto at = [&](const Rational &t) { return add(start, scale(direction.as_point(), t)); };
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (!complex.contains(at(breaks[i]))) return false;
        if (i + 1 < breaks.size()) {
            const Rational mid = (breaks[i] + breaks[i + 1]) / 2;
            if (!complex.contains(at(mid))) return false;
        }
    }
    return true;
}

ValidationReport validate(const TropicalCurve &curve, const PolyhedralComplex &complex, BalancingMode balancing) {
    ValidationReport report;
    auto issue = [&](ValidationIssue::Kind k, const std::string &subject, const std::string &msg) {
        report.issues.push_back({k, subject, msg});
    };
    if (curve.ambient_dim() != complex.ambient_dim()) {
        fail(ErrorCategory::DimensionMismatch, "curve lives in R^" + std::to_string(curve.ambient_dim()) +
                                                   " but the complex in R^" + std::to_string(complex.ambient_dim()));
    }
    std::set<std::string> outside;
    for (const auto &v : curve.vertices()) {
        if (!complex.contains(v.position)) {
            issue(ValidationIssue::Kind::OutsideComplex, v.id, "vertex at " + to_string(v.position) + " is outside the complex");
            outside.insert(v.id);
        }
    }
    for (const auto &e : curve.internal_edges()) {
        const auto &tail = curve.vertex(e.tail).position;
        const auto &head = curve.vertex(e.head).position;
        const RationalPoint expected = add(tail, scale(e.derivative.as_point(), e.length));
        if (expected != head) {
            issue(ValidationIssue::Kind::Displacement, e.id,
                  "head - tail = " + to_string(subtract(head, tail)) + " but length * derivative = " +
                      to_string(subtract(expected, tail)));
            continue;
        }
        if (outside.contains(e.tail) || outside.contains(e.head)) continue;
        if (!segment_in_complex(complex, tail, e.derivative, e.length))
            issue(ValidationIssue::Kind::OutsideComplex, e.id, "edge image leaves the complex");
    }
    std::set<std::string> labels;
    for (const auto &e : curve.ends()) {
        if (!labels.insert(e.label).second)
            issue(ValidationIssue::Kind::DuplicateLabel, e.id, "end label '" + e.label + "' is used twice");
        if (outside.contains(e.vertex)) continue;
        const auto &p = curve.vertex(e.vertex).position;
        bool ray = false;
        for (const auto &id : complex.faces_containing(p))
            if (spans_infinite_ray(complex.face(id).polytope, p, e.derivative)) ray = true;
        if (!ray)
            issue(ValidationIssue::Kind::EndNotRay, e.id,
                  "derivative " + e.derivative.to_string() + " spans no infinite ray from " + to_string(p));
    }
    if (balancing != BalancingMode::Off) {
        for (const auto &v : curve.vertices()) {
            if (outside.contains(v.id)) continue;
            if (balancing == BalancingMode::InteriorOnly && !complex.is_maximal(complex.minimal_face_containing(v.position).id))
                continue;
            IntegralVector sum(curve.ambient_dim());
            for (const auto &inc : curve.incidences(v.id)) sum = sum + inc.outgoing;
            if (!sum.is_zero())
                issue(ValidationIssue::Kind::Balancing, v.id, "outgoing derivatives sum to " + sum.to_string());
        }
    }
    return report;
}

std::vector<unsigned> component_genera(const TropicalCurve &curve) {
    std::vector<unsigned> out;
    for (const auto &comp : curve.connected_components()) {
        std::set<std::string> ids;
        long g = 0;
        for (std::size_t i : comp) {
            ids.insert(curve.vertices()[i].id);
            g += curve.vertices()[i].genus;
        }
        long edges = 0;
        for (const auto &e : curve.internal_edges())
            if (ids.contains(e.tail)) ++edges;
        out.push_back(static_cast<unsigned>(g + edges - static_cast<long>(comp.size()) + 1));
    }
    return out;
}

unsigned genus(const TropicalCurve &curve) {
    auto g = component_genera(curve);
    if (g.size() != 1) fail(ErrorCategory::Precondition, "curve has " + std::to_string(g.size()) + " components");
    return g.front();
}

long euler_exponent(const TropicalCurve &curve) {
    return 2 * static_cast<long>(genus(curve)) - 2 + static_cast<long>(curve.ends().size());
}

Integer k_gamma(const TropicalCurve &curve) {
    Integer k = 1;
    for (const auto &e : curve.internal_edges()) k *= content(e.derivative);
    return k;
}

Integer aut_order(const TropicalCurve &curve) { return count_isomorphisms(curve, curve); }

RationalPoint CutCurveComponent::evaluation_point(const CutEdge &e) const {
    return add(vertex.position, scale(e.derivative.as_point(), e.cut_length));
}

const CutEdge &CutCurveComponent::cut_edge(const std::string &id) const {
    for (const auto &e : cut_edges)
        if (e.id == id) return e;
    fail(ErrorCategory::Precondition, "component '" + vertex.id + "' has no cut edge '" + id + "'");
}

long euler_exponent(const CutCurveComponent &component) {
    return 2 * static_cast<long>(component.vertex.genus) - 2 + static_cast<long>(component.cut_edges.size());
}

std::vector<CutCurveComponent> cut(const TropicalCurve &curve, const std::map<std::string, Rational> &cut_points) {
    for (const auto &[id, t] : cut_points)
        if (!curve.edge_index(id) && !curve.end_index(id))
            fail(ErrorCategory::Precondition, "cut point given for unknown edge '" + id + "'");
    auto point = [&](const std::string &id) -> const Rational & {
        auto it = cut_points.find(id);
        if (it == cut_points.end()) fail(ErrorCategory::Precondition, "no cut point on edge '" + id + "'");
        return it->second;
    };
    std::vector<CutCurveComponent> out;
    for (const auto &v : curve.vertices()) out.push_back(CutCurveComponent{v, {}});
    for (const auto &e : curve.internal_edges()) {
        const Rational &t = point(e.id);
        if (t <= 0 || t >= e.length)
            fail(ErrorCategory::Precondition, "cut point " + to_string(t) + " on edge '" + e.id + "' is not strictly inside (0, " +
                                                  to_string(e.length) + ")");
        out[curve.vertex_index(e.tail)].cut_edges.push_back({e.id + ":tail", e.derivative, t, e.id, CutSide::Tail, ""});
        out[curve.vertex_index(e.head)].cut_edges.push_back(
            {e.id + ":head", -e.derivative, Rational(e.length - t), e.id, CutSide::Head, ""});
    }
    for (const auto &e : curve.ends()) {
        const Rational &t = point(e.id);
        if (t <= 0) fail(ErrorCategory::Precondition, "cut point on end '" + e.id + "' must be positive");
        out[curve.vertex_index(e.vertex)].cut_edges.push_back({e.id, e.derivative, t, e.id, CutSide::End, e.label});
    }
    return out;
}

std::map<std::string, Rational> midpoint_cut_points(const TropicalCurve &curve) {
    std::map<std::string, Rational> out;
    for (const auto &e : curve.internal_edges()) out.emplace(e.id, Rational(e.length / 2));
    for (const auto &e : curve.ends()) out.emplace(e.id, Rational(1));
    return out;
}

CutMatching induced_matching(const std::vector<CutCurveComponent> &components) {
    std::map<std::string, std::string> tails, heads;
    for (const auto &c : components)
        for (const auto &e : c.cut_edges) {
            if (e.side == CutSide::Tail) tails[e.source] = e.id;
            if (e.side == CutSide::Head) heads[e.source] = e.id;
        }
    CutMatching out;
    for (const auto &[source, id] : tails) {
        auto it = heads.find(source);
        if (it != heads.end()) out.emplace_back(id, it->second);
    }
    return out;
}

TropicalCurve glue(const std::vector<CutCurveComponent> &components, const CutMatching &matching,
                   const PolyhedralComplex *complex) {
    struct Where {
        std::size_t component;
        const CutEdge *edge;
    };
    std::map<std::string, Where> where;
    for (std::size_t i = 0; i < components.size(); ++i)
        for (const auto &e : components[i].cut_edges)
            if (!where.emplace(e.id, Where{i, &e}).second) fail(ErrorCategory::Gluing, "duplicate cut edge '" + e.id + "'");

    std::set<std::string> used;
    std::vector<InternalEdge> edges;
    for (auto [a_id, b_id] : matching) {
        const std::string pair = "(" + a_id + ", " + b_id + ")";
        if (!where.contains(a_id) || !where.contains(b_id)) fail(ErrorCategory::Gluing, "pair " + pair + " names an unknown cut edge");
        if (a_id == b_id || !used.insert(a_id).second || !used.insert(b_id).second)
            fail(ErrorCategory::Gluing, "pair " + pair + " reuses a cut edge");
        Where a = where.at(a_id), b = where.at(b_id);
        if (a.edge->side == CutSide::Head && b.edge->side == CutSide::Tail) std::swap(a, b);
        if (a.edge->derivative != -b.edge->derivative)
            fail(ErrorCategory::Gluing, "pair " + pair + " has derivatives " + a.edge->derivative.to_string() + " and " +
                                            b.edge->derivative.to_string() + ", which are not opposite");
        const auto pa = components[a.component].evaluation_point(*a.edge);
        const auto pb = components[b.component].evaluation_point(*b.edge);
        if (pa != pb)
            fail(ErrorCategory::Gluing, "pair " + pair + " evaluates to " + to_string(pa) + " and " + to_string(pb));
        const bool same_source = a.edge->source == b.edge->source && a.edge->side == CutSide::Tail &&
                                 b.edge->side == CutSide::Head;
        edges.push_back(InternalEdge{same_source ? a.edge->source : a.edge->id + "~" + b.edge->id,
                                     components[a.component].vertex.id, components[b.component].vertex.id,
                                     Rational(a.edge->cut_length + b.edge->cut_length), a.edge->derivative});
    }
    std::vector<CurveVertex> vertices;
    std::vector<CurveEnd> ends;
    for (const auto &c : components) {
        vertices.push_back(c.vertex);
        for (const auto &e : c.cut_edges) {
            if (used.contains(e.id)) continue;
            if (complex) {
                bool ray = false;
                for (const auto &id : complex->faces_containing(c.vertex.position))
                    if (spans_infinite_ray(complex->face(id).polytope, c.vertex.position, e.derivative)) ray = true;
                if (!ray) fail(ErrorCategory::Gluing, "unmatched cut edge '" + e.id + "' cannot be extended to an end");
            }
            ends.push_back(CurveEnd{e.side == CutSide::End ? e.source : e.id, c.vertex.id, e.derivative,
                                    e.side == CutSide::End ? e.label : e.id});
        }
    }
    return TropicalCurve(std::move(vertices), std::move(edges), std::move(ends));
}

TropicalCurve StarCurve::as_curve() const {
    std::vector<CurveEnd> ends;
    for (const auto &r : rays) ends.push_back(CurveEnd{r.id, vertex_id, r.derivative, r.id});
    return TropicalCurve({CurveVertex{vertex_id, RationalPoint(fan.ambient_dim(), Rational(0)), genus}}, {}, std::move(ends));
}

StarCurve star(const TropicalCurve &curve, const std::string &vertex_id, const PolyhedralComplex &complex) {
    const auto &v = curve.vertex(vertex_id);
    Fan fan = tangent_cone(complex, v.position);
    std::vector<StarRay> rays;
    std::set<std::size_t> tail_seen;
    for (const auto &inc : curve.incidences(vertex_id)) {
        std::string source, id;
        if (inc.kind == Incidence::Kind::End) {
            source = id = curve.ends()[inc.index].id;
        } else {
            const auto &e = curve.internal_edges()[inc.index];
            source = e.id;
            const bool from_tail = e.tail == vertex_id && tail_seen.insert(inc.index).second;
            id = e.id + (from_tail ? ":tail" : ":head");
        }
        if (!inc.outgoing.is_zero() && !fan.contains_direction(inc.outgoing))
            fail(ErrorCategory::Inconsistency, "direction " + inc.outgoing.to_string() + " of '" + source +
                                                   "' leaves the tangent cone at vertex '" + vertex_id + "'");
        rays.push_back(StarRay{id, inc.outgoing, source});
    }
    return StarCurve{vertex_id, v.genus, std::move(fan), std::move(rays)};
}

} // namespace tropgw

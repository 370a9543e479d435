#include "tropgw/evalspace.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>

namespace tropgw {

std::string to_string(const Stabilizer &s) {
    switch (s.kind) {
    case Stabilizer::Kind::Trivial: return "trivial";
    case Stabilizer::Kind::Torus: return "T";
    case Stabilizer::Kind::Cyclic: return "Z/" + to_string(s.order);
    }
    return "?";
}

std::string EvaluationComponent::id() const { return face + "|" + direction.to_string(); }

EvaluationComponent end_component(const IntegralAffinePolytope &polytope, const FaceId &face,
                                  std::size_t chart_real_dim, const IntegralVector &v, EvaluationTarget target) {
    if (v.dim() != polytope.ambient_dim())
        fail(ErrorCategory::DimensionMismatch, "direction " + v.to_string() + " does not match the face dimension");
    const long chart = static_cast<long>(chart_real_dim);
    if (v.is_zero()) {
        Stabilizer s;
        if (target == EvaluationTarget::End) s.kind = Stabilizer::Kind::Torus;
        return EvaluationComponent{EvaluationComponent::Kind::Full, face, v, polytope, s, chart, std::nullopt};
    }
    if (!recedes_along(polytope, v))
        fail(ErrorCategory::NoComponent, v.to_string() + " spans no infinite ray over face '" + face + "'");
    QuotientResult q = quotient(polytope, v);
    return EvaluationComponent{EvaluationComponent::Kind::RayQuotient,
                               face,
                               v,
                               q.polytope,
                               Stabilizer{Stabilizer::Kind::Cyclic, content(v)},
                               chart - 2,
                               std::move(q)};
}

EvaluationComponent end_component(const PolyhedralComplex &complex, const FaceId &face, const IntegralVector &v,
                                  EvaluationTarget target, const std::optional<RationalPoint> &at) {
    const Face &f = complex.face(face);
    if (v.is_zero()) return end_component(f.polytope, face, f.chart_real_dim, v, target);
    const IntegralAffinePolytope cone = at ? tangent_cone_at(f.polytope, *at) : completion(f.polytope);
    return end_component(cone, face, f.chart_real_dim, v, target);
}

EvaluationComponent component_at(const PolyhedralComplex &complex, const RationalPoint &point, const IntegralVector &v,
                                 EvaluationTarget target) {
    const Face &f = complex.minimal_face_containing(point);
    return end_component(complex, f.id, v, target, point);
}

std::vector<EdgeComponent> rend_gamma(const PolyhedralComplex &complex, const TropicalCurve &curve,
                                      EvaluationTarget target) {
    std::vector<EdgeComponent> out;
    for (const auto &e : curve.internal_edges()) {
        const auto mid = add(curve.vertex(e.tail).position, scale(e.derivative.as_point(), Rational(e.length / 2)));
        out.push_back({e.id, true, component_at(complex, mid, e.derivative, target)});
    }
    for (const auto &e : curve.ends()) {
        const auto p = add(curve.vertex(e.vertex).position, e.derivative.as_point());
        out.push_back({e.id, false, component_at(complex, p, e.derivative, target)});
    }
    return out;
}

IntegerMatrix identification(const EvaluationComponent &forward, const EvaluationComponent &backward) {
    const std::string pair = forward.id() + " and " + backward.id();
    if (forward.face != backward.face) fail(ErrorCategory::Diagram, "components " + pair + " lie over different faces");
    if (forward.direction != -backward.direction)
        fail(ErrorCategory::Diagram, "components " + pair + " do not have opposite directions");
    if (forward.stabilizer != backward.stabilizer || forward.real_dimension != backward.real_dimension)
        fail(ErrorCategory::Diagram, "components " + pair + " have different stabilizers or dimensions");
    if (forward.kind == EvaluationComponent::Kind::Full) {
        if (!(forward.polytope == backward.polytope)) fail(ErrorCategory::Diagram, "components " + pair + " differ");
        return IntegerMatrix::identity(forward.rank());
    }
    const QuotientResult &qf = *forward.quotient;
    const QuotientResult &qb = *backward.quotient;
    // y in v-coordinates lifts to section_v y; its (-v)-coordinates are G y.
    const IntegerMatrix g = qb.projection * qf.section;
    const auto &cf = forward.polytope.constraints();
    const auto &cb = backward.polytope.constraints();
    if (cf.size() != cb.size()) fail(ErrorCategory::Diagram, "components " + pair + " have different quotient polytopes");
    for (std::size_t i = 0; i < cf.size(); ++i) {
        const bool same = g.left_multiply(cb[i].functional.linear) == cf[i].functional.linear &&
                          cb[i].functional.constant == cf[i].functional.constant && cb[i].strict == cf[i].strict;
        if (!same) fail(ErrorCategory::Diagram, "quotient polytopes of " + pair + " do not correspond");
    }
    return g;
}

GluingDiagram gluing_diagram(const PolyhedralComplex &complex, const TropicalCurve &curve,
                             const std::vector<CutCurveComponent> &components) {
    struct Located {
        const CutCurveComponent *component;
        const CutEdge *edge;
    };
    std::map<std::string, Located> tails, heads, ends;
    for (const auto &c : components)
        for (const auto &e : c.cut_edges) {
            auto &slot = e.side == CutSide::Tail ? tails : e.side == CutSide::Head ? heads : ends;
            slot[e.source] = Located{&c, &e};
        }

    GluingDiagram d;
    for (const auto &e : curve.internal_edges()) {
        if (!tails.contains(e.id) || !heads.contains(e.id))
            fail(ErrorCategory::Diagram, "internal edge '" + e.id + "' is missing a cut side");
        const Located t = tails.at(e.id), h = heads.at(e.id);
        const auto pt = t.component->evaluation_point(*t.edge);
        const auto ph = h.component->evaluation_point(*h.edge);
        if (pt != ph)
            fail(ErrorCategory::Diagram, "the two sides of '" + e.id + "' evaluate to " + to_string(pt) + " and " + to_string(ph));
        EvaluationComponent a = component_at(complex, pt, t.edge->derivative, EvaluationTarget::End);
        EvaluationComponent b = component_at(complex, ph, h.edge->derivative, EvaluationTarget::End);
        IntegerMatrix g = identification(a, b);
        d.diagonal_real_dimension += a.real_dimension;
        d.forgotten_real_dimension += a.real_dimension;
        d.forgotten.push_back(e.id);
        d.diagonal.push_back(DiagonalPair{e.id, t.edge->id, h.edge->id, std::move(a), std::move(b), std::move(g)});
    }
    std::vector<const CurveEnd *> sorted;
    for (const auto &e : curve.ends()) sorted.push_back(&e);
    std::stable_sort(sorted.begin(), sorted.end(), [](const CurveEnd *x, const CurveEnd *y) { return x->label < y->label; });
    for (const CurveEnd *e : sorted) {
        if (!ends.contains(e->id)) fail(ErrorCategory::Diagram, "end '" + e->id + "' is missing from the cut components");
        const Located l = ends.at(e->id);
        const auto p = l.component->evaluation_point(*l.edge);
        d.outputs.push_back(OutputFactor{d.outputs.size(), e->id, e->label, component_at(complex, p, e->derivative, EvaluationTarget::End)});
    }
    return d;
}

} // namespace tropgw

#include "tropgw/complex.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>
#include <set>

namespace tropgw {

namespace {

// p subset of q
bool contained_in(const IntegralAffinePolytope &p, const IntegralAffinePolytope &q) {
    for (const auto &c : q.constraints()) {
        auto conds = p.conditions();
        conds.push_back(negated_condition(c));
        if (feasible(p.ambient_dim(), conds)) return false;
    }
    return true;
}

std::optional<IntegralAffinePolytope> intersect(const IntegralAffinePolytope &a, const IntegralAffinePolytope &b) {
    auto cs = a.constraints();
    cs.insert(cs.end(), b.constraints().begin(), b.constraints().end());
    return IntegralAffinePolytope::make_if_nonempty(a.ambient_dim(), std::move(cs));
}

} // namespace

std::vector<std::size_t> implicit_equalities(const IntegralAffinePolytope &p) {
    std::vector<std::size_t> implicit;
    for (std::size_t i = 0; i < p.constraints().size(); ++i) {
        const auto &c = p.constraints()[i];
        if (c.strict) continue;
        auto conds = p.conditions();
        conds[i].relation = Relation::Greater;
        if (!feasible(p.ambient_dim(), conds)) implicit.push_back(i);
    }
    return implicit;
}

std::size_t polytope_dimension(const IntegralAffinePolytope &p) { return stratum_dimension(p, implicit_equalities(p)); }

RationalPoint relative_interior_point(const IntegralAffinePolytope &p) {
    const auto implicit = implicit_equalities(p);
    auto conds = p.conditions();
    for (std::size_t i = 0; i < conds.size(); ++i)
        conds[i].relation = std::binary_search(implicit.begin(), implicit.end(), i) ? Relation::Equal : Relation::Greater;
    auto x = find_point(p.ambient_dim(), conds);
    if (!x) fail(ErrorCategory::Inconsistency, "no relative-interior point found for " + describe(p));
    return *x;
}

IntegralAffinePolytope completion(const IntegralAffinePolytope &p) { return tangent_cone_at(p, relative_interior_point(p)); }

bool is_geometric_face(const IntegralAffinePolytope &sub, const IntegralAffinePolytope &super) {
    if (sub.ambient_dim() != super.ambient_dim()) return false;
    if (!contained_in(sub, super)) return false;
    std::vector<std::size_t> vanishing;
    for (std::size_t i = 0; i < super.constraints().size(); ++i) {
        const auto &c = super.constraints()[i];
        if (c.strict) continue;
        auto conds = sub.conditions();
        conds.push_back(LinearCondition{as_condition(c).coefficients, c.functional.constant, Relation::Greater});
        if (!feasible(sub.ambient_dim(), conds)) vanishing.push_back(i);
    }
    if (vanishing.empty()) return false; // sub would be all of super, or not a face
    auto face_conds = super.conditions();
    for (std::size_t i : vanishing) face_conds.push_back(equality_condition(super.constraints()[i].functional));
    // Proper: some point of super lies off the face.
    bool proper = false;
    for (std::size_t i : vanishing) {
        auto conds = super.conditions();
        conds[i].relation = Relation::Greater;
        if (feasible(super.ambient_dim(), conds)) proper = true;
    }
    if (!proper) return false;
    for (const auto &c : sub.constraints()) {
        auto conds = face_conds;
        conds.push_back(negated_condition(c));
        if (feasible(super.ambient_dim(), conds)) return false;
    }
    return true;
}

PolyhedralComplex::PolyhedralComplex(std::size_t ambient_dim, std::vector<Face> faces,
                                     std::vector<std::pair<FaceId, FaceId>> incidence)
    : dim_(ambient_dim), faces_(std::move(faces)), incidence_(std::move(incidence)) {
    if (faces_.empty()) fail(ErrorCategory::Validation, "a complex needs at least one face");
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        const auto &f = faces_[i];
        if (f.polytope.ambient_dim() != dim_) {
            fail(ErrorCategory::Validation, "face '" + f.id + "' is not in the ambient R^" + std::to_string(dim_));
        }
        if (!index_.emplace(f.id, i).second) fail(ErrorCategory::Validation, "duplicate face id '" + f.id + "'");
        dims_.push_back(polytope_dimension(f.polytope));
    }

    const std::size_t n = faces_.size();
    below_.assign(n, std::vector<bool>(n, false));
    for (const auto &[sub, super] : incidence_) {
        if (!has_face(sub) || !has_face(super)) {
            fail(ErrorCategory::Validation, "incidence (" + sub + ", " + super + ") names an unknown face");
        }
        const std::size_t a = index_.at(sub);
        const std::size_t b = index_.at(super);
        if (!is_geometric_face(faces_[a].polytope, faces_[b].polytope)) {
            fail(ErrorCategory::Validation, "'" + sub + "' is not geometrically a proper face of '" + super + "'");
        }
        below_[a][b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (below_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (below_[k][j]) below_[i][j] = true;

    // Complex condition: two faces meet in a common face.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (below_[i][j] || below_[j][i]) continue;
            auto meet = intersect(faces_[i].polytope, faces_[j].polytope);
            if (!meet) continue;
            bool covered = false;
            for (std::size_t h = 0; h < n && !covered; ++h) {
                const bool under_i = h == i || below_[h][i];
                const bool under_j = h == j || below_[h][j];
                if (under_i && under_j && contained_in(*meet, faces_[h].polytope)) covered = true;
            }
            if (!covered) {
                fail(ErrorCategory::Validation,
                     "faces '" + faces_[i].id + "' and '" + faces_[j].id + "' meet outside any common declared face");
            }
        }
}

const Face &PolyhedralComplex::face(const FaceId &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) fail(ErrorCategory::Precondition, "unknown face '" + id + "'");
    return faces_[it->second];
}

std::size_t PolyhedralComplex::face_dimension(const FaceId &id) const {
    face(id);
    return dims_[index_.at(id)];
}

bool PolyhedralComplex::is_proper_face(const FaceId &sub, const FaceId &super) const {
    face(sub);
    face(super);
    return below_[index_.at(sub)][index_.at(super)];
}

std::vector<FaceId> PolyhedralComplex::faces_of(const FaceId &id) const {
    face(id);
    const std::size_t b = index_.at(id);
    std::vector<FaceId> out;
    for (std::size_t a = 0; a < faces_.size(); ++a)
        if (below_[a][b]) out.push_back(faces_[a].id);
    return out;
}

bool PolyhedralComplex::is_maximal(const FaceId &id) const {
    face(id);
    const std::size_t a = index_.at(id);
    return std::none_of(below_[a].begin(), below_[a].end(), [](bool x) { return x; });
}

std::vector<FaceId> PolyhedralComplex::faces_containing(const RationalPoint &p) const {
    if (p.size() != dim_) fail(ErrorCategory::DimensionMismatch, "point " + to_string(p) + " has the wrong dimension");
    std::vector<FaceId> out;
    for (const auto &f : faces_)
        if (f.polytope.contains(p)) out.push_back(f.id);
    return out;
}

bool PolyhedralComplex::contains(const RationalPoint &p) const { return !faces_containing(p).empty(); }

const Face &PolyhedralComplex::minimal_face_containing(const RationalPoint &p) const {
    const Face *best = nullptr;
    std::size_t best_dim = 0;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (!faces_[i].polytope.contains(p)) continue;
        if (!best || dims_[i] < best_dim) {
            best = &faces_[i];
            best_dim = dims_[i];
        }
    }
    if (!best) fail(ErrorCategory::OutsideComplex, "point " + to_string(p) + " lies in no face of the complex");
    return *best;
}

PolyhedralComplex dual_complex(const NCDegenerationDescription &d, std::size_t chart_real_dim) {
    const std::size_t n = d.components.size();
    if (n == 0) fail(ErrorCategory::Validation, "a degeneration needs at least one component");
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        if (!pos.emplace(d.components[i], i).second)
            fail(ErrorCategory::Validation, "duplicate component '" + d.components[i] + "'");

    std::set<std::vector<std::size_t>> declared;
    for (std::size_t i = 0; i < n; ++i) declared.insert({i});
    for (const auto &inter : d.intersections) {
        std::vector<std::size_t> s;
        for (const auto &name : inter) {
            auto it = pos.find(name);
            if (it == pos.end()) fail(ErrorCategory::Validation, "intersection names unknown component '" + name + "'");
            s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.size() < 2) {
            fail(ErrorCategory::Validation, "an intersection must list at least two distinct components");
        }
        declared.insert(s);
    }
    for (const auto &s : declared) {
        if (s.size() < 3) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> sub;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) sub.push_back(s[k]);
            if (!declared.contains(sub)) {
                std::string names;
                for (std::size_t k : sub) names += (names.empty() ? "" : ",") + d.components[k];
                fail(ErrorCategory::Validation, "intersections are not closed under subsets: missing {" + names + "}");
            }
        }
    }

    auto face_id = [&](const std::vector<std::size_t> &s) {
        std::string id;
        for (std::size_t k : s) id += (id.empty() ? "" : "+") + d.components[k];
        return id;
    };

    // Order faces by dimension, then by component order.
    std::vector<std::vector<std::size_t>> ordered(declared.begin(), declared.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto &a, const auto &b) { return a.size() < b.size(); });

    std::vector<Face> faces;
    for (const auto &s : ordered) {
        std::vector<Constraint> cs;
        IntegralVector sum(n);
        for (std::size_t j = 0; j < n; ++j) {
            IntegralVector e(n);
            e[j] = 1;
            const bool inside = std::binary_search(s.begin(), s.end(), j);
            cs.push_back(Constraint{{e, 0}, false});
            if (!inside) cs.push_back(Constraint{{-e, 0}, false});
            else sum[j] = 1;
        }
        cs.push_back(Constraint{{sum, -1}, false});
        cs.push_back(Constraint{{-sum, 1}, false});
        faces.push_back(Face{face_id(s), IntegralAffinePolytope(n, std::move(cs)), chart_real_dim});
    }
    std::vector<std::pair<FaceId, FaceId>> incidence;
    for (const auto &sub : ordered)
        for (const auto &super : ordered)
            if (sub.size() < super.size() && std::includes(super.begin(), super.end(), sub.begin(), sub.end()))
                incidence.emplace_back(face_id(sub), face_id(super));
    return PolyhedralComplex(n, std::move(faces), std::move(incidence));
}

StratumLocation stratum_containing(const PolyhedralComplex &c, const RationalPoint &p) {
    const Face &f = c.minimal_face_containing(p);
    auto active = active_set(f.polytope, p);
    const std::size_t dim = stratum_dimension(f.polytope, active);
    return StratumLocation{f.id, std::move(active), dim};
}

Fan::Fan(std::size_t ambient_dim, std::vector<FanCone> cones) : dim_(ambient_dim), cones_(std::move(cones)) {
    for (const auto &fc : cones_) {
        if (fc.cone.ambient_dim() != dim_) fail(ErrorCategory::Validation, "fan cone in the wrong dimension");
        for (const auto &c : fc.cone.constraints())
            if (c.functional.constant != 0 || c.strict)
                fail(ErrorCategory::Validation, "fan cone '" + fc.face + "' has a constraint not through the origin");
    }
}

bool Fan::contains_direction(const IntegralVector &v) const {
    return std::any_of(cones_.begin(), cones_.end(), [&](const FanCone &fc) { return recedes_along(fc.cone, v); });
}

Fan tangent_cone(const PolyhedralComplex &c, const RationalPoint &p) {
    auto ids = c.faces_containing(p);
    if (ids.empty()) fail(ErrorCategory::OutsideComplex, "point " + to_string(p) + " lies in no face of the complex");
    std::vector<FanCone> cones;
    for (const auto &id : ids) cones.push_back(FanCone{id, tangent_cone_at(c.face(id).polytope, p)});
    return Fan(c.ambient_dim(), std::move(cones));
}

PolyhedralComplex closure_of_stratum(const PolyhedralComplex &c, const FaceId &face) {
    std::vector<FaceId> keep = c.faces_of(face);
    keep.push_back(face);
    std::vector<Face> faces;
    for (const auto &f : c.faces())
        if (std::find(keep.begin(), keep.end(), f.id) != keep.end()) faces.push_back(f);
    std::vector<std::pair<FaceId, FaceId>> incidence;
    for (const auto &pair : c.incidence()) {
        const bool a = std::find(keep.begin(), keep.end(), pair.first) != keep.end();
        const bool b = std::find(keep.begin(), keep.end(), pair.second) != keep.end();
        if (a && b) incidence.push_back(pair);
    }
    return PolyhedralComplex(c.ambient_dim(), std::move(faces), std::move(incidence));
}

} // namespace tropgw

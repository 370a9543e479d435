#include "tropgw/polytope.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>
#include <functional>

namespace tropgw {

LinearCondition as_condition(const Constraint &c) {
    const auto &lin = c.functional.linear;
    LinearCondition out{std::vector<Rational>(lin.dim()), c.functional.constant,
                        c.strict ? Relation::Greater : Relation::GreaterEqual};
    for (std::size_t i = 0; i < lin.dim(); ++i) out.coefficients[i] = Rational(lin[i]);
    return out;
}

LinearCondition equality_condition(const IntegralAffineFunctional &f) {
    LinearCondition out{std::vector<Rational>(f.linear.dim()), f.constant, Relation::Equal};
    for (std::size_t i = 0; i < f.linear.dim(); ++i) out.coefficients[i] = Rational(f.linear[i]);
    return out;
}

LinearCondition negated_condition(const Constraint &c) {
    // not (f >= 0)  <=>  -f > 0 ;  not (f > 0)  <=>  -f >= 0
    const auto &lin = c.functional.linear;
    LinearCondition out{std::vector<Rational>(lin.dim()), -c.functional.constant,
                        c.strict ? Relation::GreaterEqual : Relation::Greater};
    for (std::size_t i = 0; i < lin.dim(); ++i) out.coefficients[i] = Rational(-lin[i]);
    return out;
}

namespace {

void check_dims(std::size_t dim, const std::vector<Constraint> &constraints) {
    for (const auto &c : constraints) {
        if (c.functional.linear.dim() != dim) {
            fail(ErrorCategory::DimensionMismatch, "constraint of dimension " + std::to_string(c.functional.linear.dim()) +
                                                       " in a polytope of ambient dimension " + std::to_string(dim));
        }
    }
}

std::vector<LinearCondition> to_conditions(const std::vector<Constraint> &constraints) {
    std::vector<LinearCondition> out;
    out.reserve(constraints.size());
    for (const auto &c : constraints) out.push_back(as_condition(c));
    return out;
}

} // namespace

IntegralAffinePolytope::IntegralAffinePolytope(std::size_t ambient_dim, std::vector<Constraint> constraints)
    : dim_(ambient_dim), constraints_(std::move(constraints)) {
    check_dims(dim_, constraints_);
    auto point = find_point(dim_, to_conditions(constraints_));
    if (!point) fail(ErrorCategory::EmptyPolytope, "polytope " + describe(*this) + " is empty");
    witness_ = std::move(*point);
}

std::optional<IntegralAffinePolytope> IntegralAffinePolytope::make_if_nonempty(std::size_t ambient_dim,
                                                                               std::vector<Constraint> constraints) {
    check_dims(ambient_dim, constraints);
    auto point = find_point(ambient_dim, to_conditions(constraints));
    if (!point) return std::nullopt;
    return IntegralAffinePolytope(ambient_dim, std::move(constraints), std::move(*point));
}

IntegralAffinePolytope IntegralAffinePolytope::whole_space(std::size_t ambient_dim) {
    return IntegralAffinePolytope(ambient_dim, {}, RationalPoint(ambient_dim, 0));
}

bool IntegralAffinePolytope::contains(const RationalPoint &x) const {
    if (x.size() != dim_) fail(ErrorCategory::DimensionMismatch, "point dimension differs from polytope dimension");
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const Constraint &c) { return c.holds(x); });
}

bool IntegralAffinePolytope::is_complete() const {
    return std::none_of(constraints_.begin(), constraints_.end(), [](const Constraint &c) { return c.strict; });
}

std::vector<LinearCondition> IntegralAffinePolytope::conditions() const { return to_conditions(constraints_); }

std::vector<std::size_t> active_set(const IntegralAffinePolytope &p, const RationalPoint &x) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < p.constraints().size(); ++i)
        if (p.constraints()[i].functional(x) == 0) active.push_back(i);
    return active;
}

std::size_t stratum_dimension(const IntegralAffinePolytope &p, const std::vector<std::size_t> &active) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i : active) {
        const auto &lin = p.constraints()[i].functional.linear;
        std::vector<Rational> row(lin.dim());
        for (std::size_t j = 0; j < lin.dim(); ++j) row[j] = Rational(lin[j]);
        rows.push_back(std::move(row));
    }
    return p.ambient_dim() - rational_rank(std::move(rows));
}

std::vector<Stratum> strata(const IntegralAffinePolytope &p) {
    const auto &cs = p.constraints();
    const std::size_t m = cs.size();
    if (m > 24) fail(ErrorCategory::Precondition, "strata enumeration limited to 24 constraints");
    std::vector<Stratum> out;
    std::vector<std::size_t> active;

    auto conditions_for = [&](bool strict_rest) {
        std::vector<LinearCondition> conds;
        std::size_t a = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (a < active.size() && active[a] == i) {
                conds.push_back(equality_condition(cs[i].functional));
                ++a;
            } else {
                LinearCondition c = as_condition(cs[i]);
                if (strict_rest) c.relation = Relation::Greater;
                conds.push_back(std::move(c));
            }
        }
        return conds;
    };

    std::function<void(std::size_t)> visit = [&](std::size_t next) {
        if (!active.empty() && !feasible(p.ambient_dim(), conditions_for(false))) return;
        if (auto w = find_point(p.ambient_dim(), conditions_for(true))) {
            out.push_back(Stratum{active, stratum_dimension(p, active), std::move(*w)});
        }
        for (std::size_t i = next; i < m; ++i) {
            if (cs[i].strict) continue; // a strict constraint is never active
            active.push_back(i);
            visit(i + 1);
            active.pop_back();
        }
    };
    visit(0);
    std::sort(out.begin(), out.end(), [](const Stratum &a, const Stratum &b) {
        if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
        return a.active < b.active;
    });
    return out;
}

IntegralAffinePolytope strata_union_tangent(const IntegralAffinePolytope &p, const IntegralVector &v) {
    if (v.dim() != p.ambient_dim()) fail(ErrorCategory::DimensionMismatch, "direction dimension differs from polytope");
    std::vector<Constraint> cs;
    for (const auto &c : p.constraints()) {
        Constraint out = c;
        if (c.functional.linear.dot(v) != 0) out.strict = true;
        cs.push_back(std::move(out));
    }
    auto result = IntegralAffinePolytope::make_if_nonempty(p.ambient_dim(), std::move(cs));
    if (!result) fail(ErrorCategory::EmptyStratum, "no stratum of " + describe(p) + " is tangent to " + v.to_string());
    return *result;
}

bool recedes_along(const IntegralAffinePolytope &p, const IntegralVector &v) {
    if (v.dim() != p.ambient_dim()) fail(ErrorCategory::DimensionMismatch, "direction dimension differs from polytope");
    return std::all_of(p.constraints().begin(), p.constraints().end(),
                       [&](const Constraint &c) { return c.functional.linear.dot(v) >= 0; });
}

bool spans_infinite_ray(const IntegralAffinePolytope &p, const RationalPoint &base, const IntegralVector &v) {
    if (!p.contains(base)) fail(ErrorCategory::Precondition, "ray base " + to_string(base) + " is not in the polytope");
    return recedes_along(p, v);
}

QuotientResult quotient(const IntegralAffinePolytope &p, const IntegralVector &v) {
    if (v.dim() != p.ambient_dim()) fail(ErrorCategory::DimensionMismatch, "direction dimension differs from polytope");
    if (v.is_zero()) fail(ErrorCategory::InvalidQuotient, "cannot take the quotient by the zero vector");
    if (!recedes_along(p, v)) {
        fail(ErrorCategory::Precondition, v.to_string() + " spans no infinite ray in " + describe(p));
    }
    const IntegralVector dir = primitive(v);
    const UnimodularCompletion basis = unimodular_completion(dir);
    const std::size_t n = p.ambient_dim();

    std::vector<Constraint> projected;
    for (const auto &c : p.constraints()) {
        if (c.functional.linear.dot(dir) != 0) continue;
        IntegralVector b = basis.section.left_multiply(c.functional.linear);
        projected.push_back(Constraint{IntegralAffineFunctional{std::move(b), c.functional.constant}, c.strict});
    }
    // The image of a nonempty set is nonempty, so this cannot throw.
    return QuotientResult{IntegralAffinePolytope(n - 1, std::move(projected)), dir, basis.projection, basis.section};
}

IntegralAffinePolytope tangent_cone_at(const IntegralAffinePolytope &p, const RationalPoint &x) {
    if (!p.contains(x)) fail(ErrorCategory::OutsideComplex, to_string(x) + " is not in " + describe(p));
    std::vector<Constraint> cs;
    for (const auto &c : p.constraints()) {
        if (c.functional(x) != 0) continue;
        cs.push_back(Constraint{IntegralAffineFunctional{c.functional.linear, Rational(0)}, false});
    }
    return IntegralAffinePolytope::make_if_nonempty(p.ambient_dim(), std::move(cs)).value();
}

std::string describe(const IntegralAffinePolytope &p) {
    std::string out = "{";
    for (std::size_t i = 0; i < p.constraints().size(); ++i) {
        const auto &c = p.constraints()[i];
        if (i) out += ", ";
        out += c.functional.linear.to_string() + ".x";
        if (c.functional.constant != 0) {
            out += c.functional.constant > 0 ? "+" : "";
            out += to_string(c.functional.constant);
        }
        out += c.strict ? ">0" : ">=0";
    }
    if (p.constraints().empty()) out += "R^" + std::to_string(p.ambient_dim());
    return out + "}";
}

} // namespace tropgw

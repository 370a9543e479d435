#pragma once

#include "tropgw/lattice.hpp"
#include "tropgw/linear_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropgw {

/// x -> <linear, x> + constant, with integer linear part.
struct IntegralAffineFunctional {
    IntegralVector linear;
    Rational constant;

    Rational operator()(const RationalPoint &x) const { return linear.dot(x) + constant; }
    friend bool operator==(const IntegralAffineFunctional &, const IntegralAffineFunctional &) = default;
};

/// functional >= 0, or functional > 0 when strict.
struct Constraint {
    IntegralAffineFunctional functional;
    bool strict = false;

    bool holds(const RationalPoint &x) const {
        const Rational v = functional(x);
        return strict ? v > 0 : v >= 0;
    }
    friend bool operator==(const Constraint &, const Constraint &) = default;
};

/// A nonempty subset of R^N cut out by finitely many integral-affine
/// inequalities. Emptiness is rejected at construction.
class IntegralAffinePolytope {
  public:
    IntegralAffinePolytope(std::size_t ambient_dim, std::vector<Constraint> constraints);

    /// Same as the constructor but returns nullopt instead of throwing when empty.
    static std::optional<IntegralAffinePolytope> make_if_nonempty(std::size_t ambient_dim,
                                                                  std::vector<Constraint> constraints);
    /// All of R^N.
    static IntegralAffinePolytope whole_space(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<Constraint> &constraints() const noexcept { return constraints_; }

    bool contains(const RationalPoint &x) const;
    /// Only non-strict constraints: closed, hence complete.
    bool is_complete() const;
    /// Some point of the polytope.
    const RationalPoint &witness() const noexcept { return witness_; }

    /// Conditions for the linear-system solver, optionally with extra ones appended.
    std::vector<LinearCondition> conditions() const;

    friend bool operator==(const IntegralAffinePolytope &a, const IntegralAffinePolytope &b) {
        return a.dim_ == b.dim_ && a.constraints_ == b.constraints_;
    }

  private:
    IntegralAffinePolytope(std::size_t dim, std::vector<Constraint> constraints, RationalPoint witness)
        : dim_(dim), constraints_(std::move(constraints)), witness_(std::move(witness)) {}

    std::size_t dim_;
    std::vector<Constraint> constraints_;
    RationalPoint witness_;
};

LinearCondition as_condition(const Constraint &c);
LinearCondition equality_condition(const IntegralAffineFunctional &f);
LinearCondition negated_condition(const Constraint &c); // the complement half-space

/// Relatively open face: the constraints in `active` vanish, the others hold strictly.
struct Stratum {
    std::vector<std::size_t> active;
    std::size_t dimension = 0;
    RationalPoint witness;
};

/// All nonempty relatively open faces, ordered by active set size then lexicographically.
std::vector<Stratum> strata(const IntegralAffinePolytope &p);

/// Active-constraint set of a point of p (the stratum it lies in).
std::vector<std::size_t> active_set(const IntegralAffinePolytope &p, const RationalPoint &x);

/// Dimension of the affine span of the stratum with the given active set.
std::size_t stratum_dimension(const IntegralAffinePolytope &p, const std::vector<std::size_t> &active);

/// P_v: constraints with <linear, v> = 0 are kept as given, the rest become strict.
/// Throws EmptyStratum when the result is empty.
IntegralAffinePolytope strata_union_tangent(const IntegralAffinePolytope &p, const IntegralVector &v);

/// base + t v in p for all t >= 0. Throws Precondition if base is not in p.
bool spans_infinite_ray(const IntegralAffinePolytope &p, const RationalPoint &base, const IntegralVector &v);

/// Direction-only form: whether v spans an infinite ray from every point of p.
bool recedes_along(const IntegralAffinePolytope &p, const IntegralVector &v);

/// P/v realized in Z^{N-1} through the deterministic unimodular completion of primitive(v).
struct QuotientResult {
    IntegralAffinePolytope polytope;
    IntegralVector direction; ///< primitive(v)
    IntegerMatrix projection; ///< (N-1) x N
    IntegerMatrix section;    ///< N x (N-1)
};

/// Throws InvalidQuotient for v = 0 and Precondition when v spans no infinite ray.
QuotientResult quotient(const IntegralAffinePolytope &p, const IntegralVector &v);

/// Tangent cone at x: constraints active at x with constants zeroed, translated to the origin.
IntegralAffinePolytope tangent_cone_at(const IntegralAffinePolytope &p, const RationalPoint &x);

std::string describe(const IntegralAffinePolytope &p);

} // namespace tropgw

#pragma once

#include "tropgw/numeric.hpp"

#include <optional>
#include <vector>

namespace tropgw {

enum class Relation { GreaterEqual, Greater, Equal };

/// coefficients . x + constant (relation) 0
struct LinearCondition {
    std::vector<Rational> coefficients;
    Rational constant;
    Relation relation = Relation::GreaterEqual;
};

/// Exact feasibility for a finite system of rational linear conditions with
/// strict and non-strict inequalities. Equalities are substituted away first;
/// the remaining variables are removed by Fourier-Motzkin elimination and a
/// witness is rebuilt by back-substitution.
std::optional<RationalPoint> find_point(std::size_t dim, const std::vector<LinearCondition> &conditions);

inline bool feasible(std::size_t dim, const std::vector<LinearCondition> &conditions) {
    return find_point(dim, conditions).has_value();
}

/// Rank over Q of the given rows.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

} // namespace tropgw

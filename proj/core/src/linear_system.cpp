#include "tropgw/linear_system.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>
#include <set>

namespace tropgw {

namespace {

struct Row {
    std::vector<Rational> a;
    Rational c;
    bool strict = false;
};

bool satisfied_constant(const Row &row) { return row.strict ? row.c > 0 : row.c >= 0; }

bool is_constant(const Row &row) {
    return std::all_of(row.a.begin(), row.a.end(), [](const Rational &x) { return x == 0; });
}

// Scale so the first nonzero coefficient has absolute value 1; used to drop
// duplicate rows produced by elimination.
void normalize(Row &row) {
    for (const auto &x : row.a) {
        if (x == 0) continue;
        const Rational s = x < 0 ? Rational(-x) : x;
        for (auto &y : row.a) y /= s;
        row.c /= s;
        return;
    }
}

struct RowKey {
    const Row *row;
    bool operator<(const RowKey &other) const {
        if (row->strict != other.row->strict) return row->strict < other.row->strict;
        for (std::size_t i = 0; i < row->a.size(); ++i) {
            const int c = cmp(row->a[i], other.row->a[i]);
            if (c != 0) return c < 0;
        }
        return cmp(row->c, other.row->c) < 0;
    }
};

// Keeps only the tightest row among parallel duplicates with equal normalized coefficients.
std::vector<Row> dedupe(std::vector<Row> rows) {
    for (auto &r : rows) normalize(r);
    std::vector<Row> out;
    std::set<RowKey> seen;
    out.reserve(rows.size());
    for (auto &r : rows) {
        if (seen.insert(RowKey{&r}).second) out.push_back(r);
    }
    // Among rows with identical coefficient vectors keep the tightest.
    std::vector<Row> pruned;
    for (std::size_t i = 0; i < out.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < out.size() && !dominated; ++j) {
            if (i == j || out[i].a != out[j].a) continue;
            const bool tighter = out[j].c < out[i].c || (out[j].c == out[i].c && out[j].strict && !out[i].strict);
            const bool equal = out[j].c == out[i].c && out[j].strict == out[i].strict;
            if (tighter || (equal && j < i)) dominated = true;
        }
        if (!dominated) pruned.push_back(out[i]);
    }
    return pruned;
}

// x_k = sum_j sub.coef[j] x_j + sub.constant for j != k.
struct Substitution {
    std::size_t var;
    std::vector<Rational> coef;
    Rational constant;
};

} // namespace

std::optional<RationalPoint> find_point(std::size_t dim, const std::vector<LinearCondition> &conditions) {
    std::vector<Row> ineq;
    std::vector<Row> eq;
    for (const auto &cond : conditions) {
        if (cond.coefficients.size() != dim) fail(ErrorCategory::DimensionMismatch, "condition has wrong dimension");
        Row row{cond.coefficients, cond.constant, cond.relation == Relation::Greater};
        (cond.relation == Relation::Equal ? eq : ineq).push_back(std::move(row));
    }

    // Gaussian substitution of the equalities.
    std::vector<Substitution> subs;
    for (std::size_t e = 0; e < eq.size(); ++e) {
        Row row = eq[e];
        std::size_t pivot = dim;
        for (std::size_t j = 0; j < dim; ++j)
            if (row.a[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == dim) {
            if (row.c != 0) return std::nullopt;
            continue;
        }
        Substitution s{pivot, std::vector<Rational>(dim, 0), -row.c / row.a[pivot]};
        for (std::size_t j = 0; j < dim; ++j)
            if (j != pivot) s.coef[j] = -row.a[j] / row.a[pivot];
        auto apply = [&](Row &r) {
            const Rational f = r.a[pivot];
            if (f == 0) return;
            for (std::size_t j = 0; j < dim; ++j) r.a[j] += f * s.coef[j];
            r.a[pivot] = 0;
            r.c += f * s.constant;
        };
        for (std::size_t k = e + 1; k < eq.size(); ++k) apply(eq[k]);
        for (auto &r : ineq) apply(r);
        subs.push_back(std::move(s));
    }

    // Fourier-Motzkin, eliminating the highest remaining variable first.
    std::vector<std::vector<Row>> levels; // system before eliminating var k
    std::vector<std::size_t> order;
    std::vector<bool> substituted(dim, false);
    for (const auto &s : subs) substituted[s.var] = true;

    std::vector<Row> current = dedupe(std::move(ineq));
    for (std::size_t k = dim; k-- > 0;) {
        if (substituted[k]) continue;
        levels.push_back(current);
        order.push_back(k);
        std::vector<Row> pos, neg, next;
        for (auto &r : current) {
            if (r.a[k] > 0) pos.push_back(r);
            else if (r.a[k] < 0) neg.push_back(r);
            else next.push_back(r);
        }
        for (const auto &p : pos)
            for (const auto &q : neg) {
                const Rational wp = -q.a[k];
                const Rational wq = p.a[k];
                Row combined{std::vector<Rational>(dim), p.c * wp + q.c * wq, p.strict || q.strict};
                for (std::size_t j = 0; j < dim; ++j) combined.a[j] = p.a[j] * wp + q.a[j] * wq;
                combined.a[k] = 0;
                next.push_back(std::move(combined));
            }
        std::vector<Row> kept;
        for (auto &r : next) {
            if (is_constant(r)) {
                if (!satisfied_constant(r)) return std::nullopt;
                continue;
            }
            kept.push_back(std::move(r));
        }
        current = dedupe(std::move(kept));
    }
    for (const auto &r : current)
        if (!satisfied_constant(r)) return std::nullopt;

    // Back-substitution: variables in reverse elimination order.
    RationalPoint x(dim, 0);
    for (std::size_t idx = order.size(); idx-- > 0;) {
        const std::size_t k = order[idx];
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rational lo, hi;
        for (const auto &r : levels[idx]) {
            if (r.a[k] == 0) continue;
            Rational rest = r.c;
            for (std::size_t j = 0; j < dim; ++j)
                if (j != k) rest += r.a[j] * x[j];
            const Rational bound = -rest / r.a[k];
            if (r.a[k] > 0) {
                if (!has_lo || bound > lo) {
                    lo = bound;
                    lo_strict = r.strict;
                    has_lo = true;
                } else if (bound == lo) {
                    lo_strict = lo_strict || r.strict;
                }
            } else {
                if (!has_hi || bound < hi) {
                    hi = bound;
                    hi_strict = r.strict;
                    has_hi = true;
                } else if (bound == hi) {
                    hi_strict = hi_strict || r.strict;
                }
            }
        }
        Rational value = 0;
        if (has_lo && has_hi) value = (lo == hi) ? lo : (lo + hi) / 2;
        else if (has_lo) value = lo_strict ? Rational(lo + 1) : lo;
        else if (has_hi) value = hi_strict ? Rational(hi - 1) : hi;
        x[k] = value;
    }
    for (std::size_t s = subs.size(); s-- > 0;) {
        Rational v = subs[s].constant;
        for (std::size_t j = 0; j < dim; ++j) v += subs[s].coef[j] * x[j];
        x[subs[s].var] = v;
    }

    // The witness must satisfy the original system exactly.
    for (const auto &cond : conditions) {
        Rational v = cond.constant;
        for (std::size_t j = 0; j < dim; ++j) v += cond.coefficients[j] * x[j];
        const bool ok = cond.relation == Relation::Equal ? v == 0 : cond.relation == Relation::Greater ? v > 0 : v >= 0;
        if (!ok) fail(ErrorCategory::Inconsistency, "internal error: elimination witness violates a condition");
    }
    return x;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace tropgw

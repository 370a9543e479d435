#include "tropgw/lattice.hpp"

#include "tropgw/errors.hpp"

#include <algorithm>
#include <utility>

namespace tropgw {

IntegralVector::IntegralVector(std::initializer_list<long> entries) {
    entries_.reserve(entries.size());
    for (long e : entries) entries_.emplace_back(e);
}

bool IntegralVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer &e) { return e == 0; });
}

IntegralVector IntegralVector::operator-() const {
    IntegralVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = -entries_[i];
    return out;
}

IntegralVector IntegralVector::operator+(const IntegralVector &other) const {
    if (dim() != other.dim()) fail(ErrorCategory::DimensionMismatch, "vector dimensions differ");
    IntegralVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] + other[i];
    return out;
}

IntegralVector IntegralVector::operator-(const IntegralVector &other) const { return *this + (-other); }

IntegralVector IntegralVector::operator*(const Integer &factor) const {
    IntegralVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] * factor;
    return out;
}

Integer IntegralVector::dot(const IntegralVector &other) const {
    if (dim() != other.dim()) fail(ErrorCategory::DimensionMismatch, "vector dimensions differ");
    Integer sum = 0;
    for (std::size_t i = 0; i < dim(); ++i) sum += entries_[i] * other[i];
    return sum;
}

Rational IntegralVector::dot(const RationalPoint &point) const {
    if (dim() != point.size()) fail(ErrorCategory::DimensionMismatch, "vector and point dimensions differ");
    Rational sum = 0;
    for (std::size_t i = 0; i < dim(); ++i) sum += Rational(entries_[i]) * point[i];
    return sum;
}

RationalPoint IntegralVector::as_point() const {
    RationalPoint out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = Rational(entries_[i]);
    return out;
}

Integer IntegralVector::max_abs_entry() const {
    Integer best = 0;
    for (const auto &e : entries_) best = std::max(best, tropgw::abs(e));
    return best;
}

std::string IntegralVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) out += ",";
        out += entries_[i].get_str();
    }
    return out + ")";
}

std::strong_ordering operator<=>(const IntegralVector &a, const IntegralVector &b) {
    if (a.dim() != b.dim()) return a.dim() <=> b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Integer content(const IntegralVector &v) {
    Integer g = 0;
    for (const auto &e : v.entries()) g = gcd(g, e);
    return g;
}

IntegralVector primitive(const IntegralVector &v) {
    const Integer c = content(v);
    if (c == 0) fail(ErrorCategory::Precondition, "the zero vector has no primitive direction");
    IntegralVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / c;
    return out;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) fail(ErrorCategory::DimensionMismatch, "ragged matrix literal");
        for (long e : r) data_.emplace_back(e);
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegralVector> &rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols) fail(ErrorCategory::DimensionMismatch, "row has wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegralVector IntegerMatrix::row(std::size_t r) const {
    IntegralVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
}

IntegralVector IntegerMatrix::operator*(const IntegralVector &v) const {
    if (v.dim() != cols_) fail(ErrorCategory::DimensionMismatch, "matrix-vector size mismatch");
    IntegralVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer s = 0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix &other) const {
    if (cols_ != other.rows_) fail(ErrorCategory::DimensionMismatch, "matrix product size mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(r, k) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
        }
    return out;
}

IntegralVector IntegerMatrix::left_multiply(const IntegralVector &row) const {
    if (row.dim() != rows_) fail(ErrorCategory::DimensionMismatch, "row-matrix size mismatch");
    IntegralVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        Integer s = 0;
        for (std::size_t r = 0; r < rows_; ++r) s += row[r] * (*this)(r, c);
        out[c] = s;
    }
    return out;
}

Integer determinant(const IntegerMatrix &m) {
    if (!m.is_square()) {
        fail(ErrorCategory::DimensionMismatch,
             "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

Integer abs_det(const IntegerMatrix &m) { return abs(determinant(m)); }

std::vector<Integer> elementary_divisors(const IntegerMatrix &m) {
    IntegerMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t n = std::min(rows, cols);
    std::vector<Integer> diag(n, 0);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    Integer v = abs(a(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) return diag;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce the divisibility chain d_t | every trailing entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t c = t; c < cols; ++c) a(t, c) += a(i, c);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        diag[t] = abs(a(t, t));
    }
    return diag;
}

Integer lattice_index(const IntegerMatrix &m) {
    if (!m.is_square()) fail(ErrorCategory::DimensionMismatch, "lattice index needs a square matrix");
    Integer index = 1;
    for (const auto &d : elementary_divisors(m)) index *= d;
    return index;
}

UnimodularCompletion unimodular_completion(const IntegralVector &primitive_v) {
    const std::size_t n = primitive_v.dim();
    if (n == 0 || content(primitive_v) != 1) {
        fail(ErrorCategory::Precondition, "unimodular completion needs a primitive vector, got " + primitive_v.to_string());
    }
    IntegerMatrix u = IntegerMatrix::identity(n);
    IntegerMatrix inv = IntegerMatrix::identity(n);
    IntegralVector w = primitive_v;

    for (std::size_t i = n - 1; i >= 1; --i) {
        const Integer a = w[i - 1];
        const Integer b = w[i];
        if (b == 0) continue;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const Integer bg = b / g;
        const Integer ag = a / g;
        // rows (i-1, i) <- [[s, t], [-b/g, a/g]] * rows (i-1, i); determinant 1.
        for (std::size_t c = 0; c < n; ++c) {
            const Integer r0 = u(i - 1, c);
            const Integer r1 = u(i, c);
            u(i - 1, c) = s * r0 + t * r1;
            u(i, c) = -bg * r0 + ag * r1;
        }
        // columns (i-1, i) of the inverse <- columns * [[a/g, -t], [b/g, s]].
        for (std::size_t r = 0; r < n; ++r) {
            const Integer c0 = inv(r, i - 1);
            const Integer c1 = inv(r, i);
            inv(r, i - 1) = c0 * ag + c1 * bg;
            inv(r, i) = -c0 * t + c1 * s;
        }
        w[i - 1] = g;
        w[i] = 0;
    }
    if (w[0] < 0) {
        for (std::size_t c = 0; c < n; ++c) u(0, c) = -u(0, c);
        for (std::size_t r = 0; r < n; ++r) inv(r, 0) = -inv(r, 0);
    }

    UnimodularCompletion out{u, inv, IntegerMatrix(n - 1, n), IntegerMatrix(n, n - 1)};
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.projection(r - 1, c) = u(r, c);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 1; c < n; ++c) out.section(r, c - 1) = inv(r, c);
    return out;
}

} // namespace tropgw

#pragma once

#include "tropgw/numeric.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropgw {

/// An element of Z^N. Derivatives of tropical curves, ray directions and the
/// linear parts of integral-affine functionals all live here.
class IntegralVector {
  public:
    IntegralVector() = default;
    explicit IntegralVector(std::size_t dim) : entries_(dim, 0) {}
    explicit IntegralVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
    IntegralVector(std::initializer_list<long> entries);

    std::size_t dim() const noexcept { return entries_.size(); }
    const Integer &operator[](std::size_t i) const { return entries_[i]; }
    Integer &operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Integer> &entries() const noexcept { return entries_; }

    bool is_zero() const;
    IntegralVector operator-() const;
    IntegralVector operator+(const IntegralVector &other) const;
    IntegralVector operator-(const IntegralVector &other) const;
    IntegralVector operator*(const Integer &factor) const;

    Integer dot(const IntegralVector &other) const;
    Rational dot(const RationalPoint &point) const;
    RationalPoint as_point() const;

    /// Largest absolute entry; 0 for the zero vector.
    Integer max_abs_entry() const;

    std::string to_string() const;

    friend bool operator==(const IntegralVector &, const IntegralVector &) = default;
    friend std::strong_ordering operator<=>(const IntegralVector &a, const IntegralVector &b);

  private:
    std::vector<Integer> entries_;
};

/// gcd of the absolute values of the entries; 0 exactly for the zero vector.
Integer content(const IntegralVector &v);

/// v / content(v). Throws Precondition for the zero vector.
IntegralVector primitive(const IntegralVector &v);

/// Dense integer matrix, row-major.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix from_rows(const std::vector<IntegralVector> &rows, std::size_t cols);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    IntegralVector row(std::size_t r) const;
    IntegralVector operator*(const IntegralVector &v) const;
    IntegerMatrix operator*(const IntegerMatrix &other) const;
    IntegralVector left_multiply(const IntegralVector &row) const; // row * M

    friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Signed determinant by Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix &m);

/// |det M|. Throws DimensionMismatch for non-square input.
Integer abs_det(const IntegerMatrix &m);

/// Diagonal of the Smith normal form (nonnegative, each dividing the next,
/// trailing zeros for rank deficiency). Length min(rows, cols).
std::vector<Integer> elementary_divisors(const IntegerMatrix &m);

/// Index [Z^k : M Z^k] for square M; 0 when M is singular. Computed from
/// the elementary divisors, independently of determinant().
Integer lattice_index(const IntegerMatrix &m);

/// For a primitive v in Z^N: a unimodular U with U v = e_0, produced by a
/// deterministic sequence of extended-gcd row operations (the column Hermite
/// reduction of v), together with U^{-1}.
///
/// Rows 1..N-1 of U give coordinates on Z^N / Z v (`projection`), and columns
/// 1..N-1 of U^{-1} give a section of that projection (`section`).
struct UnimodularCompletion {
    IntegerMatrix unimodular;
    IntegerMatrix inverse;
    IntegerMatrix projection; ///< (N-1) x N, kernel exactly Z v
    IntegerMatrix section;    ///< N x (N-1), projection * section = identity
};

UnimodularCompletion unimodular_completion(const IntegralVector &primitive_v);

} // namespace tropgw

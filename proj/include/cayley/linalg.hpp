#pragma once

#include "cayley/rational.hpp"

#include <cstddef>
#include <vector>

namespace cayley {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] RationalVector row(std::size_t r) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
RationalVector operator*(const RationalMatrix& a, const RationalVector& v);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);

/// Result of row reduction: the pivot columns in order.
struct EchelonInfo {
    std::vector<std::size_t> pivot_columns;
    [[nodiscard]] std::size_t rank() const { return pivot_columns.size(); }
};

/// Exact rank via fraction-free elimination over the integers.
std::size_t rank(const RationalMatrix& a);

/// Basis of {v : a v = 0}. Pivoting takes the first nonzero entry in column
/// order, and each basis vector is scaled so its first nonzero entry is 1.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);

bool is_nilpotent(const RationalMatrix& a);

} // namespace cayley

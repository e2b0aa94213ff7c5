#pragma once

#include "cayley/polynomial.hpp"

#include <vector>

namespace cayley {

/// Rectangular matrix of polynomials sharing one ambient dimension.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t dimension);
    static PolyMatrix identity(std::size_t n, std::size_t dimension);
    static PolyMatrix from_rows(std::vector<std::vector<Polynomial>> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t dimension() const { return dimension_; }

    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t dimension_;
    std::vector<Polynomial> entries_;
};

/// Cofactor expansion up to 3x3, fraction-free Bareiss elimination over the
/// polynomial ring beyond that. Throws std::invalid_argument when not square.
Polynomial determinant(const PolyMatrix& m);

/// Plain Laplace expansion along the first row, any size.
Polynomial cofactor_determinant(const PolyMatrix& m);

/// Matrix of second partial derivatives of f.
PolyMatrix hessian(const Polynomial& f);

} // namespace cayley

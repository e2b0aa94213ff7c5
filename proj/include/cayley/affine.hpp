#pragma once

#include "cayley/linalg.hpp"
#include "cayley/polynomial.hpp"

namespace cayley {

/// The affine map x -> matrix * x + translation on column vectors.
class AffineTransformation {
public:
    AffineTransformation(RationalMatrix matrix, RationalVector translation);

    static AffineTransformation identity(std::size_t n);
    static AffineTransformation translation(RationalVector shift);
    /// x_h -> scale^h x_h, the one-parameter subgroup generated by the
    /// weighted Euler field, written with multiplicative parameter.
    static AffineTransformation weighted_scaling(std::size_t n, const Rational& scale);

    [[nodiscard]] std::size_t dimension() const { return translation_.size(); }
    [[nodiscard]] const RationalMatrix& matrix() const { return matrix_; }
    [[nodiscard]] const RationalVector& translation() const { return translation_; }
    [[nodiscard]] bool is_invertible() const;

    [[nodiscard]] RationalVector apply(const RationalVector& point) const;
    /// Throws std::domain_error when the linear part is singular.
    [[nodiscard]] AffineTransformation inverse() const;

    /// (a * b)(x) = a(b(x)).
    friend AffineTransformation operator*(const AffineTransformation& a, const AffineTransformation& b);
    friend bool operator==(const AffineTransformation&, const AffineTransformation&) = default;

private:
    RationalMatrix matrix_;
    RationalVector translation_;
};

/// p o T, i.e. the polynomial x -> p(T(x)).
Polynomial substitute_affine(const Polynomial& p, const AffineTransformation& t);

} // namespace cayley

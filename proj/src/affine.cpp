#include "cayley/affine.hpp"

#include <stdexcept>

namespace cayley {

AffineTransformation::AffineTransformation(RationalMatrix matrix, RationalVector translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
    if (!matrix_.is_square() || matrix_.rows() != translation_.size())
        throw std::invalid_argument("affine transformation: matrix and translation sizes disagree");
}

AffineTransformation AffineTransformation::identity(std::size_t n) {
    return {RationalMatrix::identity(n), RationalVector(n)};
}

AffineTransformation AffineTransformation::translation(RationalVector shift) {
    const std::size_t n = shift.size();
    return {RationalMatrix::identity(n), std::move(shift)};
}

AffineTransformation AffineTransformation::weighted_scaling(std::size_t n, const Rational& scale) {
    RationalMatrix m(n, n);
    Rational power = 1;
    for (std::size_t h = 0; h < n; ++h) {
        power *= scale;
        m(h, h) = power;
    }
    return {std::move(m), RationalVector(n)};
}

bool AffineTransformation::is_invertible() const { return determinant(matrix_) != 0; }

RationalVector AffineTransformation::apply(const RationalVector& point) const {
    if (point.size() != dimension()) throw std::invalid_argument("affine transformation: point dimension mismatch");
    return matrix_ * point + translation_;
}

AffineTransformation AffineTransformation::inverse() const {
    RationalMatrix inv = cayley::inverse(matrix_);
    RationalVector shift = Rational(-1) * (inv * translation_);
    return {std::move(inv), std::move(shift)};
}

AffineTransformation operator*(const AffineTransformation& a, const AffineTransformation& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("affine composition: dimension mismatch");
    return {a.matrix_ * b.matrix_, a.matrix_ * b.translation_ + a.translation_};
}

Polynomial substitute_affine(const Polynomial& p, const AffineTransformation& t) {
    const std::size_t n = p.dimension();
    if (t.dimension() != n)
        throw std::invalid_argument("substitute_affine: transformation has dimension " + std::to_string(t.dimension()) +
                                    ", polynomial " + std::to_string(n));
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial image = Polynomial::constant(n, t.translation()[i]);
        for (std::size_t k = 0; k < n; ++k)
            if (t.matrix()(i, k) != 0) image.add_term(Monomial::variable(static_cast<VarIndex>(k + 1)), t.matrix()(i, k));
        images.push_back(std::move(image));
    }
    return compose(p, images);
}

} // namespace cayley

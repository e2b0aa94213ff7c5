#pragma once

#include "cayley/affine.hpp"
#include "cayley/linalg.hpp"
#include "cayley/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace cayley {

/// Degree-one vector field sum_j (constant_j + sum_i linear(i,j) x_i) d/dx_j.
/// Row i of the linear part holds the coefficients of x_{i+1}.
class AffineVectorField {
public:
    explicit AffineVectorField(std::size_t n);
    AffineVectorField(RationalVector constant, RationalMatrix linear);

    /// d/dx_j, 1-based.
    static AffineVectorField coordinate(std::size_t n, VarIndex j);

    [[nodiscard]] std::size_t dimension() const { return constant_.size(); }
    [[nodiscard]] const RationalVector& constant() const { return constant_; }
    [[nodiscard]] const RationalMatrix& linear() const { return linear_; }
    [[nodiscard]] bool is_zero() const;

    /// Coefficient polynomial of d/dx_j.
    [[nodiscard]] Polynomial component(VarIndex j) const;
    /// (constant, linear row-major) flattened; the coordinates used for span tests.
    [[nodiscard]] RationalVector coordinates() const;
    static AffineVectorField from_coordinates(std::size_t n, const RationalVector& coords);

    friend AffineVectorField operator+(const AffineVectorField& a, const AffineVectorField& b);
    friend AffineVectorField operator-(const AffineVectorField& a, const AffineVectorField& b);
    friend AffineVectorField operator*(const Rational& s, const AffineVectorField& x);
    friend bool operator==(const AffineVectorField&, const AffineVectorField&) = default;

private:
    RationalVector constant_;
    RationalMatrix linear_;
};

/// Basis of affine fields X with X p = c p, one eigenvalue c per basis field.
struct SymmetryAlgebra {
    std::vector<AffineVectorField> basis;
    std::vector<Rational> eigenvalues;

    [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

/// Raised by exp_field for fields whose flow is not polynomial in t.
class InexactExponential : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Polynomial apply_field(const AffineVectorField& x, const Polynomial& p);

/// X_p = d/dx_p + sum_{h>p} x_{h-p} d/dx_h for p = 1..N-1.
std::vector<AffineVectorField> cayley_fields(unsigned n);

/// H = sum_h h x_h d/dx_h.
AffineVectorField euler_field(unsigned n);

/// [X,Y] f = X(Y f) - Y(X f).
AffineVectorField commutator(const AffineVectorField& x, const AffineVectorField& y);

/// Time-t flow of X. Requires a nilpotent linear part so the exponential
/// series terminates; throws InexactExponential otherwise.
AffineTransformation exp_field(const AffineVectorField& x, const Rational& t);

/// exp(sum_p t_p X_p) applied to the origin; lies on the Cayley hypersurface.
RationalVector orbit_point(unsigned n, const RationalVector& t);

/// Inverse of the orbit map on the first N-1 coordinates.
RationalVector parameters_for_point(unsigned n, const RationalVector& x);

/// All affine fields X (with any constant c) such that X p = c p.
/// Unknowns are ordered (c, constant part, linear part row-major).
SymmetryAlgebra symmetry_algebra(const Polynomial& p);

/// Linear fields only (zero constant part) with X p = c p.
SymmetryAlgebra isotropy_at_origin(const Polynomial& p);

/// Exact rank of the coordinate vectors of a list of fields.
std::size_t field_rank(const std::vector<AffineVectorField>& fields);

/// True iff every candidate lies in the span of basis.
bool span_contains(const std::vector<AffineVectorField>& basis, const std::vector<AffineVectorField>& candidates);

} // namespace cayley

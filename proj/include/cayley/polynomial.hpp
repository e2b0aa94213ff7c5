#pragma once

#include "cayley/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

/// Variables are 1-based: x_1 .. x_N.
using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// A product of variable powers with no coefficient. Stored sparsely as
/// (variable, exponent) pairs sorted by variable, exponents always positive.
class Monomial {
public:
    using Factor = std::pair<VarIndex, Exponent>;

    Monomial() = default;
    /// Accepts unsorted, repeated or zero-exponent factors and normalizes them.
    Monomial(std::initializer_list<Factor> factors);
    explicit Monomial(std::vector<Factor> factors);

    static Monomial variable(VarIndex v, Exponent e = 1);

    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] Exponent exponent(VarIndex v) const;
    [[nodiscard]] unsigned total_degree() const;
    /// Sum of index * exponent, the grading in which x_h has weight h.
    [[nodiscard]] unsigned long weighted_degree() const;
    [[nodiscard]] bool is_one() const { return factors_.empty(); }
    [[nodiscard]] VarIndex max_variable() const { return factors_.empty() ? 0 : factors_.back().first; }

    /// Drops one power of v; v must divide this monomial.
    [[nodiscard]] Monomial without(VarIndex v) const;
    [[nodiscard]] bool divides(const Monomial& other) const;
    /// other / this; requires divides(other).
    [[nodiscard]] Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void normalize();
    std::vector<Factor> factors_;
};

/// Print order used everywhere terms are listed: ascending total degree,
/// then descending lexicographic order on exponent vectors (x_1 first).
/// This reproduces the layout x_4 = x_1x_3 + 1/2 x_2^2 - x_1^2x_2 + 1/4 x_1^4.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Lexicographic comparison of exponent vectors (x_1 most significant).
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored, so structural
/// equality is mathematical equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalOrder>;

    explicit Polynomial(std::size_t dimension = 0) : dimension_(dimension) {}

    static Polynomial constant(std::size_t dimension, const Rational& c);
    static Polynomial variable(std::size_t dimension, VarIndex v);
    static Polynomial term(std::size_t dimension, const Monomial& m, const Rational& c);

    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int total_degree() const;
    /// Highest total degree counting only variables in the given set.
    [[nodiscard]] unsigned degree_in(std::span<const VarIndex> variables) const;
    /// Terms of total degree exactly d.
    [[nodiscard]] Polynomial homogeneous_part(unsigned d) const;

    /// Adds c * m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    /// Same terms viewed in a larger (or equal) number of variables.
    [[nodiscard]] Polynomial embed(std::size_t new_dimension) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_compatible(const Polynomial& other) const;
    std::size_t dimension_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Formal partial derivative with respect to x_h (1-based).
Polynomial partial_derivative(const Polynomial& p, VarIndex h);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Composes p with polynomial images of each variable: x_i -> images[i-1].
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

/// Exact quotient p / d. Throws std::domain_error when d does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

/// True iff every monomial has sum(weights[i-1] * e_i) == w. Vacuous for zero.
bool weighted_degree_check(const Polynomial& p, std::span<const unsigned> weights, long w);

/// Plain text such as "x1*x2 - 1/3*x1^3"; "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

} // namespace cayley

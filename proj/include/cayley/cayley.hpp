#pragma once

#include "cayley/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cayley {

/// Ordered tuple of positive parts.
using Composition = std::vector<unsigned>;
/// Multiset of positive parts, kept in non-increasing order.
using Partition = std::vector<unsigned>;

/// Calls visit for every composition of n into d parts, in lexicographic
/// order, without materializing the list. Throws when d is outside [1, n].
void for_each_composition(unsigned n, unsigned d, const std::function<void(const Composition&)>& visit);
std::vector<Composition> compositions(unsigned n, unsigned d);

/// Every partition of n, each in non-increasing order.
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit);

/// Sum over d of (-1)^d / d times the sum over compositions of N into d
/// parts of x_i x_j ... x_m. The d = 1 term is -x_N.
Polynomial cayley_poly(unsigned n);
/// Same polynomial built term by term from compositions (2^(N-1) products).
Polynomial cayley_poly_by_compositions(unsigned n);
/// Same polynomial built from partitions with closed-form coefficients.
Polynomial cayley_poly_by_partitions(unsigned n);

/// Coefficient of prod x_part in the Cayley polynomial of weight sum(parts):
/// (-1)^d (d-1)! / prod(multiplicity!). Parts may be given in any order.
Rational coefficient_closed_form(unsigned n, const std::vector<unsigned>& parts);

/// f in x_1..x_{N-1} with cayley_poly(N) = -x_N + f.
Polynomial graph_function(unsigned n);

/// Coefficient multiplying the d-part composition sum in the interpolating
/// family: (-1)^d / d! * prod_{k=0}^{d-3} ((1-b)k + 2).
Rational family_coefficient(unsigned d, const Rational& b);
/// The interpolating family; b = 0 is the Cayley polynomial.
Polynomial family_poly(unsigned n, const Rational& b);

/// -x_4 + x_1x_3 + 1/2 x_2^2 - 1/3 x_1^3, the variant with larger isotropy.
Polynomial variant_surface_4();

std::size_t monomial_count(unsigned n);

/// Graph-form LaTeX, e.g. "x_3=x_1x_2-\frac{1}{3}x_1{}^3", when p has the
/// shape -x_N + f(x_1..x_{N-1}); otherwise "<p>=0".
std::string to_latex(const Polynomial& p);

/// Graph-form plain text, "x3 = x1*x2 - 1/3*x1^3"; otherwise "<p> = 0".
std::string to_plain_equation(const Polynomial& p);

/// Splits p = -x_N + f when possible, returning f in N-1 variables.
std::optional<Polynomial> as_graph(const Polynomial& p);

} // namespace cayley

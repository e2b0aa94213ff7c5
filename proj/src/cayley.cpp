#include "cayley/cayley.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

void compositions_rec(unsigned remaining, unsigned parts_left, Composition& prefix,
                      const std::function<void(const Composition&)>& visit) {
    if (parts_left == 1) {
        prefix.push_back(remaining);
        visit(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned first = 1; first + (parts_left - 1) <= remaining; ++first) {
        prefix.push_back(first);
        compositions_rec(remaining - first, parts_left - 1, prefix, visit);
        prefix.pop_back();
    }
}

void partitions_rec(unsigned remaining, unsigned largest, Partition& prefix,
                    const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, visit);
        prefix.pop_back();
    }
}

Monomial monomial_of(const std::vector<unsigned>& parts) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(parts.size());
    for (unsigned p : parts) factors.emplace_back(p, 1);
    return Monomial(std::move(factors));
}

// d! / prod(multiplicity!): the number of distinct orderings of a multiset.
Rational ordering_count(const std::vector<unsigned>& parts) {
    std::map<unsigned, unsigned> multiplicity;
    for (unsigned p : parts) ++multiplicity[p];
    Rational count = factorial(static_cast<unsigned>(parts.size()));
    for (const auto& [part, m] : multiplicity) count /= factorial(m);
    return count;
}

void require_positive(unsigned n) {
    if (n == 0) throw std::invalid_argument("dimension N must be at least 1");
}

constexpr unsigned kCompositionPathLimit = 12;

} // namespace

void for_each_composition(unsigned n, unsigned d, const std::function<void(const Composition&)>& visit) {
    if (d < 1 || d > n)
        throw std::invalid_argument("compositions: need 1 <= d <= n (got n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d) + ")");
    Composition prefix;
    prefix.reserve(d);
    compositions_rec(n, d, prefix, visit);
}

std::vector<Composition> compositions(unsigned n, unsigned d) {
    std::vector<Composition> out;
    for_each_composition(n, d, [&](const Composition& c) { out.push_back(c); });
    return out;
}

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit) {
    Partition prefix;
    partitions_rec(n, n, prefix, visit);
}

Polynomial cayley_poly_by_compositions(unsigned n) {
    require_positive(n);
    Polynomial phi(n);
    for (unsigned d = 1; d <= n; ++d) {
        const Rational coeff(Integer(d % 2 == 0 ? 1 : -1), Integer(d));
        for_each_composition(n, d, [&](const Composition& c) { phi.add_term(monomial_of(c), coeff); });
    }
    return phi;
}

Polynomial cayley_poly_by_partitions(unsigned n) {
    require_positive(n);
    Polynomial phi(n);
    for_each_partition(n, [&](const Partition& p) { phi.add_term(monomial_of(p), coefficient_closed_form(n, p)); });
    return phi;
}

Polynomial cayley_poly(unsigned n) {
    return n <= kCompositionPathLimit ? cayley_poly_by_compositions(n) : cayley_poly_by_partitions(n);
}

Rational coefficient_closed_form(unsigned n, const std::vector<unsigned>& parts) {
    unsigned sum = 0;
    for (unsigned p : parts) {
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
        sum += p;
    }
    if (sum != n || parts.empty())
        throw std::invalid_argument("partition parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
    const auto d = static_cast<unsigned>(parts.size());
    Rational c = ordering_count(parts) / Rational(d);
    return d % 2 == 0 ? c : Rational(-c);
}

Polynomial graph_function(unsigned n) {
    if (n < 2) throw std::invalid_argument("graph_function needs N >= 2");
    return *as_graph(cayley_poly(n));
}

Rational family_coefficient(unsigned d, const Rational& b) {
    Rational c = 1 / factorial(d);
    for (unsigned k = 0; k + 3 <= d; ++k) c *= (1 - b) * k + 2;
    return d % 2 == 0 ? c : Rational(-c);
}

Polynomial family_poly(unsigned n, const Rational& b) {
    require_positive(n);
    Polynomial p(n);
    for_each_partition(n, [&](const Partition& parts) {
        const auto d = static_cast<unsigned>(parts.size());
        p.add_term(monomial_of(parts), family_coefficient(d, b) * ordering_count(parts));
    });
    return p;
}

Polynomial variant_surface_4() {
    Polynomial p(4);
    p.add_term(Monomial{{4, 1}}, -1);
    p.add_term(Monomial{{1, 1}, {3, 1}}, 1);
    p.add_term(Monomial{{2, 2}}, Rational(1, 2));
    p.add_term(Monomial{{1, 3}}, Rational(-1, 3));
    return p;
}

std::size_t monomial_count(unsigned n) { return cayley_poly(n).term_count(); }

std::optional<Polynomial> as_graph(const Polynomial& p) {
    const auto n = static_cast<VarIndex>(p.dimension());
    if (n == 0) return std::nullopt;
    if (p.coefficient(Monomial::variable(n)) != -1) return std::nullopt;
    Polynomial f = p + Polynomial::variable(n, n);
    for (const auto& [m, c] : f.terms())
        if (m.exponent(n) > 0) return std::nullopt;
    return f.embed(n - 1);
}

namespace {

std::string latex_variable(VarIndex v) {
    return v < 10 ? "x_" + std::to_string(v) : "x_{" + std::to_string(v) + "}";
}

std::string latex_body(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        const Rational magnitude = abs(c);
        if (magnitude.get_den() != 1)
            out << "\\frac{" << magnitude.get_num().get_str() << "}{" << magnitude.get_den().get_str() << "}";
        else if (magnitude != 1 || m.is_one())
            out << magnitude.get_num().get_str();
        for (const auto& [v, e] : m.factors()) {
            out << latex_variable(v);
            if (e > 1) out << "{}^" << (e < 10 ? std::to_string(e) : "{" + std::to_string(e) + "}");
        }
    }
    return out.str();
}

} // namespace

std::string to_latex(const Polynomial& p) {
    if (auto f = as_graph(p)) return latex_variable(static_cast<VarIndex>(p.dimension())) + "=" + latex_body(*f);
    return latex_body(p) + "=0";
}

std::string to_plain_equation(const Polynomial& p) {
    if (auto f = as_graph(p)) return "x" + std::to_string(p.dimension()) + " = " + to_string(*f);
    return to_string(p) + " = 0";
}

} // namespace cayley

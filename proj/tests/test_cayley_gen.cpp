#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/cayley.hpp"
#include "golden.hpp"
#include "test_support.hpp"

#include <map>
#include <set>

using namespace cayley;
using cayley::testing::Gen;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

Polynomial build(std::size_t n, std::initializer_list<std::pair<Monomial, Rational>> terms) {
    Polynomial p(n);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

// The composition-sum definition evaluated with an arbitrary per-d
// coefficient, using the brute-force composition oracle.
Polynomial composition_sum(unsigned n, const std::function<Rational(unsigned)>& coeff) {
    Polynomial p(n);
    for (unsigned d = 1; d <= n; ++d)
        for (const auto& c : testing::brute_force_compositions(n, d)) {
            std::vector<Monomial::Factor> f;
            for (unsigned part : c) f.emplace_back(part, 1);
            p.add_term(Monomial(f), coeff(d));
        }
    return p;
}

} // namespace

TEST_CASE("compositions examples") {
    CHECK(compositions(3, 2) == std::vector<Composition>{{1, 2}, {2, 1}});
    CHECK(compositions(4, 3) == testing::brute_force_compositions(4, 3));
    CHECK(compositions(4, 3) == std::vector<Composition>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK(compositions(10, 4).size() == 84);
    CHECK(testing::binomial(9, 3) == 84);
    CHECK(compositions(10, 4) == testing::brute_force_compositions(10, 4));
    CHECK_THROWS_AS(compositions(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(compositions(3, 0), std::invalid_argument);
}

TEST_CASE("property: compositions are complete, ordered, counted by binomials") {
    for (unsigned n = 1; n <= 9; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            const auto all = compositions(n, d);
            CHECK(all.size() == testing::binomial(n - 1, d - 1));
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::set<Composition>(all.begin(), all.end()).size() == all.size());
            for (const auto& c : all) {
                CHECK(c.size() == d);
                unsigned sum = 0;
                for (unsigned part : c) sum += part;
                CHECK(sum == n);
            }
        }
}

TEST_CASE("cayley_poly matches the displayed equations") {
    CHECK(cayley_poly(3) == build(3, {{Monomial{{3, 1}}, -1}, {Monomial{{1, 1}, {2, 1}}, 1}, {Monomial{{1, 3}}, q(-1, 3)}}));
    CHECK(cayley_poly(4) == build(4, {{Monomial{{4, 1}}, -1},
                                      {Monomial{{1, 1}, {3, 1}}, 1},
                                      {Monomial{{2, 2}}, q(1, 2)},
                                      {Monomial{{1, 2}, {2, 1}}, -1},
                                      {Monomial{{1, 4}}, q(1, 4)}}));
    CHECK(cayley_poly(5) == build(5, {{Monomial{{5, 1}}, -1},
                                      {Monomial{{1, 1}, {4, 1}}, 1},
                                      {Monomial{{2, 1}, {3, 1}}, 1},
                                      {Monomial{{1, 2}, {3, 1}}, -1},
                                      {Monomial{{1, 1}, {2, 2}}, -1},
                                      {Monomial{{1, 3}, {2, 1}}, 1},
                                      {Monomial{{1, 5}}, q(-1, 5)}}));
    const Polynomial phi6 = cayley_poly(6);
    CHECK(phi6 == build(6, {{Monomial{{6, 1}}, -1},
                            {Monomial{{1, 1}, {5, 1}}, 1},
                            {Monomial{{2, 1}, {4, 1}}, 1},
                            {Monomial{{3, 2}}, q(1, 2)},
                            {Monomial{{1, 2}, {4, 1}}, -1},
                            {Monomial{{1, 1}, {2, 1}, {3, 1}}, -2},
                            {Monomial{{2, 3}}, q(-1, 3)},
                            {Monomial{{1, 3}, {3, 1}}, 1},
                            {Monomial{{1, 2}, {2, 2}}, q(3, 2)},
                            {Monomial{{1, 4}, {2, 1}}, -1},
                            {Monomial{{1, 6}}, q(1, 6)}}));
    CHECK(phi6.coefficient(Monomial{{1, 1}, {2, 1}, {3, 1}}) == -2);
    CHECK(phi6.coefficient(Monomial{{2, 3}}) == q(-1, 3));
    CHECK_THROWS_AS(cayley_poly(0), std::invalid_argument);
}

TEST_CASE("LaTeX rendering matches golden files") {
    for (unsigned n = 3; n <= 6; ++n)
        CHECK(to_latex(cayley_poly(n)) == testing::golden_compact("cayley_" + std::to_string(n) + ".tex"));
    CHECK(to_latex(variant_surface_4()) == testing::golden_compact("variant_4.tex"));
    CHECK(to_latex(cayley_poly(10)).starts_with("x_{10}=x_1x_9+"));
    CHECK(to_latex(cayley_poly(10)).ends_with("+\\frac{1}{10}x_1{}^{10}"));
    CHECK(to_latex(Polynomial::variable(2, 1)) == "x_1=0");
}

TEST_CASE("plain rendering") {
    CHECK(to_plain_equation(cayley_poly(3)) == "x3 = x1*x2 - 1/3*x1^3");
    CHECK(to_plain_equation(cayley_poly(4)) == "x4 = x1*x3 + 1/2*x2^2 - x1^2*x2 + 1/4*x1^4");
    CHECK(to_plain_equation(cayley_poly(1)) == "x1 = 0");
    CHECK(to_plain_equation(Polynomial::variable(2, 2)) == "x2 = 0");
}

TEST_CASE("graph_function examples") {
    CHECK(graph_function(3) == build(2, {{Monomial{{1, 1}, {2, 1}}, 1}, {Monomial{{1, 3}}, q(-1, 3)}}));
    CHECK(graph_function(5) == build(4, {{Monomial{{1, 1}, {4, 1}}, 1},
                                         {Monomial{{2, 1}, {3, 1}}, 1},
                                         {Monomial{{1, 2}, {3, 1}}, -1},
                                         {Monomial{{1, 1}, {2, 2}}, -1},
                                         {Monomial{{1, 3}, {2, 1}}, 1},
                                         {Monomial{{1, 5}}, q(-1, 5)}}));
    for (unsigned n = 2; n <= 10; ++n)
        CHECK(cayley_poly(n) + Polynomial::variable(n, n) == graph_function(n).embed(n));
    CHECK_THROWS_AS(graph_function(1), std::invalid_argument);
}

TEST_CASE("coefficient_closed_form examples") {
    CHECK(coefficient_closed_form(6, {1, 1, 2, 2}) == q(3, 2));
    CHECK(coefficient_closed_form(6, {2, 1, 2, 1}) == q(3, 2));
    for (unsigned n = 1; n <= 12; ++n) CHECK(coefficient_closed_form(n, {n}) == -1);
    CHECK(coefficient_closed_form(5, {1, 1, 1, 2}) == 1);
    CHECK_THROWS_AS(coefficient_closed_form(5, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_closed_form(5, {}), std::invalid_argument);
}

TEST_CASE("property: closed form agrees with enumeration for every partition, N <= 12") {
    for (unsigned n = 1; n <= 12; ++n) {
        const Polynomial phi = cayley_poly_by_compositions(n);
        std::size_t partitions = 0;
        for_each_partition(n, [&](const Partition& p) {
            std::vector<Monomial::Factor> f;
            for (unsigned part : p) f.emplace_back(part, 1);
            CHECK(phi.coefficient(Monomial(f)) == coefficient_closed_form(n, p));
            ++partitions;
        });
        CHECK(partitions == phi.term_count());
        CHECK(cayley_poly_by_partitions(n) == phi);
    }
}

TEST_CASE("property: composition sum reproduces cayley_poly") {
    for (unsigned n = 1; n <= 9; ++n) {
        const Polynomial direct =
            composition_sum(n, [](unsigned d) { return make_rational(d % 2 == 0 ? 1 : -1, static_cast<long>(d)); });
        CHECK(direct == cayley_poly(n));
    }
}

TEST_CASE("property: structural invariants of Phi_N, N <= 20") {
    for (unsigned n = 1; n <= 20; ++n) {
        const Polynomial phi = cayley_poly(n);
        std::size_t with_xn = 0;
        for (const auto& [m, c] : phi.terms())
            if (m.exponent(n) > 0) {
                ++with_xn;
                CHECK(m == Monomial::variable(n));
                CHECK(c == -1);
            }
        CHECK(with_xn == 1);
        std::vector<unsigned> weights(n);
        for (unsigned h = 0; h < n; ++h) weights[h] = h + 1;
        CHECK(weighted_degree_check(phi, weights, n));
    }
}

TEST_CASE("monomial_count examples and partition oracle") {
    CHECK(monomial_count(4) == 5);
    CHECK(monomial_count(6) == 11);
    CHECK(monomial_count(20) == 627);
    CHECK(testing::partition_count(20) == 627);
    for (unsigned n = 1; n <= 20; ++n) CHECK(monomial_count(n) == testing::partition_count(n));
}

TEST_CASE("family_poly") {
    for (unsigned n = 1; n <= 10; ++n) CHECK(family_poly(n, 0) == cayley_poly(n));
    CHECK_THROWS_AS(family_poly(0, 1), std::invalid_argument);

    // At b = 1 every bracket equals 2, so the d-part coefficient is
    // (-1)^d 2^(d-2) / d!. Compare with the bracket product evaluated directly.
    for (unsigned d = 2; d <= 10; ++d) {
        Rational product = 1;
        for (unsigned k = 0; k + 3 <= d; ++k) product *= (1 - Rational(1)) * k + 2;
        const Rational sign = d % 2 == 0 ? 1 : -1;
        Rational expected = sign * product / factorial(d);
        Rational power_of_two = 1;
        for (unsigned k = 2; k < d; ++k) power_of_two *= 2;
        CHECK(expected == sign * power_of_two / factorial(d));
        CHECK(family_coefficient(d, 1) == expected);
    }

    Gen gen(77);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational b = gen.rational(20, 9);
        CHECK(family_coefficient(3, b) == q(-1, 3));
        const unsigned n = static_cast<unsigned>(gen.integer(3, 9));
        const Polynomial p = family_poly(n, b);
        std::vector<unsigned> weights(n);
        for (unsigned h = 0; h < n; ++h) weights[h] = h + 1;
        CHECK(weighted_degree_check(p, weights, n));
        // Partition fast path versus the composition-sum definition.
        CHECK(p == composition_sum(n, [&](unsigned d) { return family_coefficient(d, b); }));
    }
    CHECK(family_coefficient(1, 5) == -1);
    CHECK(family_coefficient(2, 5) == q(1, 2));
}

TEST_CASE("variant_surface_4") {
    const Polynomial v = variant_surface_4();
    CHECK(v.term_count() == 4);
    CHECK(v.dimension() == 4);
    CHECK(evaluate(v, std::vector<Rational>(4)) == 0);
    const std::vector<unsigned> weights{1, 2, 3, 4};
    CHECK_FALSE(weighted_degree_check(v, weights, 4));
    CHECK(to_plain_equation(v) == "x4 = x1*x3 + 1/2*x2^2 - 1/3*x1^3");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/cayley.hpp"
#include "cayley/symmetry.hpp"
#include "test_support.hpp"

using namespace cayley;
using cayley::testing::Gen;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }
Polynomial x(std::size_t n, VarIndex v) { return Polynomial::variable(n, v); }

AffineVectorField random_field(std::size_t n, Gen& gen) {
    RationalVector coords(n + n * n);
    for (auto& c : coords) c = gen.integer(0, 2) == 0 ? Rational(0) : gen.rational(4, 3);
    return AffineVectorField::from_coordinates(n, coords);
}

} // namespace

TEST_CASE("apply_field examples") {
    CHECK(apply_field(cayley_fields(3)[0], cayley_poly(3)).is_zero());
    for (unsigned n = 3; n <= 10; ++n) {
        CHECK(apply_field(euler_field(n), cayley_poly(n)) == Rational(n) * cayley_poly(n));
        CHECK(apply_field(AffineVectorField::coordinate(n, n), cayley_poly(n)) == Polynomial::constant(n, -1));
    }
    CHECK_THROWS_AS(apply_field(euler_field(3), cayley_poly(4)), std::invalid_argument);
}

TEST_CASE("cayley_fields shape") {
    const auto f3 = cayley_fields(3);
    REQUIRE(f3.size() == 2);
    // d/dx_1 + x_1 d/dx_2 + x_2 d/dx_3
    CHECK(f3[0].component(1) == Polynomial::constant(3, 1));
    CHECK(f3[0].component(2) == x(3, 1));
    CHECK(f3[0].component(3) == x(3, 2));
    CHECK(f3[0].linear()(0, 1) == 1);
    CHECK(f3[0].linear()(1, 2) == 1);
    // d/dx_2 + x_1 d/dx_3
    CHECK(f3[1].component(1).is_zero());
    CHECK(f3[1].component(2) == Polynomial::constant(3, 1));
    CHECK(f3[1].component(3) == x(3, 1));
    CHECK_THROWS_AS(cayley_fields(1), std::invalid_argument);

    for (unsigned n = 2; n <= 8; ++n) {
        const auto fields = cayley_fields(n);
        CHECK(fields.size() == n - 1);
        for (unsigned p = 1; p < n; ++p) {
            const auto& f = fields[p - 1];
            for (unsigned i = 0; i < n; ++i) {
                CHECK(f.constant()[i] == (i + 1 == p ? 1 : 0));
                for (unsigned j = 0; j < n; ++j) CHECK(f.linear()(i, j) == (j == i + p ? 1 : 0));
            }
        }
    }
}

TEST_CASE("annihilation: every X_p kills Phi_N, N <= 12") {
    for (unsigned n = 2; n <= 12; ++n)
        for (const auto& f : cayley_fields(n)) CHECK(apply_field(f, cayley_poly(n)).is_zero());
}

TEST_CASE("euler_field") {
    const auto h = euler_field(4);
    CHECK(h.constant() == RationalVector(4));
    for (unsigned i = 0; i < 4; ++i) CHECK(h.linear()(i, i) == i + 1);
    CHECK(apply_field(euler_field(1), x(1, 1)) == x(1, 1));
}

TEST_CASE("commutator identities") {
    for (unsigned n = 2; n <= 10; ++n) {
        const auto fields = cayley_fields(n);
        const auto normal = AffineVectorField::coordinate(n, n);
        for (const auto& a : fields) {
            for (const auto& b : fields) CHECK(commutator(a, b).is_zero());
            CHECK(commutator(a, normal).is_zero());
        }
        CHECK(commutator(normal, euler_field(n)) == Rational(n) * normal);
        CHECK(commutator(euler_field(n), normal) == Rational(-static_cast<long>(n)) * normal);
    }
    Gen gen(3);
    const auto f = random_field(3, gen);
    CHECK(commutator(f, f).is_zero());
    CHECK_THROWS_AS(commutator(euler_field(2), euler_field(3)), std::invalid_argument);
}

TEST_CASE("property: bracket equals X(Yf) - Y(Xf)") {
    Gen gen(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
        const auto a = random_field(n, gen);
        const auto b = random_field(n, gen);
        std::vector<Polynomial> tests;
        for (VarIndex v = 1; v <= n; ++v) tests.push_back(x(n, v));
        tests.push_back(gen.polynomial(n, 4, 3));
        for (const auto& f : tests)
            CHECK(apply_field(commutator(a, b), f) == apply_field(a, apply_field(b, f)) - apply_field(b, apply_field(a, f)));
    }
}

TEST_CASE("exp_field") {
    const auto x1 = cayley_fields(3)[0];
    CHECK(exp_field(x1, 1).apply({0, 0, 0}) == RationalVector{1, q(1, 2), q(1, 6)});
    CHECK(exp_field(x1, 0) == AffineTransformation::identity(3));
    CHECK_THROWS_AS(exp_field(euler_field(3), 1), InexactExponential);

    Gen gen(21);
    for (unsigned n = 2; n <= 6; ++n)
        for (const auto& f : cayley_fields(n)) {
            const Rational s = gen.rational();
            const Rational t = gen.rational();
            CHECK(exp_field(f, s) * exp_field(f, t) == exp_field(f, s + t));
            CHECK(substitute_affine(cayley_poly(n), exp_field(f, t)) == cayley_poly(n));
        }
}

TEST_CASE("weighted scaling multiplies Phi_N by lambda^N") {
    Gen gen(22);
    for (unsigned n = 2; n <= 8; ++n) {
        const Rational lambda = gen.nonzero_rational();
        Rational power = 1;
        for (unsigned k = 0; k < n; ++k) power *= lambda;
        CHECK(substitute_affine(cayley_poly(n), AffineTransformation::weighted_scaling(n, lambda)) ==
              power * cayley_poly(n));
    }
}

TEST_CASE("orbit_point and parameters_for_point") {
    CHECK(orbit_point(3, {1, 0}) == RationalVector{1, q(1, 2), q(1, 6)});
    CHECK(parameters_for_point(3, {1, q(1, 2)}) == RationalVector{1, 0});
    for (unsigned n = 2; n <= 8; ++n) {
        CHECK(orbit_point(n, RationalVector(n - 1)) == RationalVector(n));
        CHECK(parameters_for_point(n, RationalVector(n - 1)) == RationalVector(n - 1));
    }
    CHECK_THROWS_AS(orbit_point(3, {1}), std::invalid_argument);

    Gen gen(23);
    for (unsigned n = 2; n <= 10; ++n)
        for (int trial = 0; trial < 100; ++trial) {
            RationalVector t(n - 1);
            for (auto& v : t) v = gen.rational();
            const RationalVector pt = orbit_point(n, t);
            CHECK(evaluate(cayley_poly(n), pt) == 0);
            CHECK(parameters_for_point(n, RationalVector(pt.begin(), pt.end() - 1)) == t);
        }
}

TEST_CASE("symmetry_algebra of the Cayley surface") {
    const auto alg = symmetry_algebra(cayley_poly(3));
    CHECK(alg.dimension() == 3);
    auto known = cayley_fields(3);
    known.push_back(euler_field(3));
    CHECK(field_rank(known) == 3);
    CHECK(span_contains(alg.basis, known));
    CHECK(span_contains(known, alg.basis));
}

TEST_CASE("symmetry_algebra of Phi_N contains the known fields") {
    for (unsigned n = 3; n <= 8; ++n) {
        const auto alg = symmetry_algebra(cayley_poly(n));
        CHECK(alg.dimension() >= n);
        auto known = cayley_fields(n);
        known.push_back(euler_field(n));
        CHECK(span_contains(alg.basis, known));
    }
}

TEST_CASE("solver soundness and basis normalization") {
    Gen gen(31);
    std::vector<Polynomial> inputs{cayley_poly(4), variant_surface_4(), family_poly(4, q(1, 2))};
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(1, 3)), 4, 3);
        if (!p.is_zero()) inputs.push_back(p);
    }
    for (const auto& p : inputs) {
        const auto alg = symmetry_algebra(p);
        CHECK(field_rank(alg.basis) == alg.dimension());
        for (std::size_t k = 0; k < alg.dimension(); ++k) {
            CHECK(apply_field(alg.basis[k], p) == alg.eigenvalues[k] * p);
            const Rational lead = alg.eigenvalues[k] != 0 ? alg.eigenvalues[k] : [&] {
                for (const auto& c : alg.basis[k].coordinates())
                    if (c != 0) return c;
                return Rational(0);
            }();
            CHECK(lead == 1);
        }
    }
    CHECK_THROWS_AS(symmetry_algebra(Polynomial(3)), std::invalid_argument);
}

TEST_CASE("solver completeness against sampled dense systems") {
    Gen gen(37);
    for (unsigned n = 2; n <= 4; ++n) {
        CHECK(symmetry_algebra(cayley_poly(n)).dimension() == testing::sampled_symmetry_dimension(cayley_poly(n), true, gen));
        CHECK(isotropy_at_origin(cayley_poly(n)).dimension() ==
              testing::sampled_symmetry_dimension(cayley_poly(n), false, gen));
    }
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(1, 3)), 4, 3);
        if (p.is_zero()) continue;
        CHECK(symmetry_algebra(p).dimension() == testing::sampled_symmetry_dimension(p, true, gen));
    }
}

TEST_CASE("rotationally symmetric paraboloid") {
    const Polynomial p = x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2) - x(3, 3);
    AffineVectorField rotation(3);
    RationalMatrix lin(3, 3);
    lin(0, 1) = 1;  // x_1 d/dx_2
    lin(1, 0) = -1; // -x_2 d/dx_1
    rotation = AffineVectorField(RationalVector(3), lin);
    CHECK(apply_field(rotation, p).is_zero());
    CHECK(span_contains(symmetry_algebra(p).basis, {rotation}));
}

TEST_CASE("isotropy_at_origin") {
    for (unsigned n = 3; n <= 8; ++n) {
        const auto iso = isotropy_at_origin(cayley_poly(n));
        CHECK(iso.dimension() == 1);
        CHECK(span_contains(iso.basis, {euler_field(n)}));
        CHECK(iso.eigenvalues[0] == 1);
        // Normalized so c = 1, hence the basis field is H / N.
        CHECK(iso.basis[0] == make_rational(1, n) * euler_field(n));
    }
    CHECK(isotropy_at_origin(variant_surface_4()).dimension() == 2);
    const Polynomial saddle = x(3, 1) * x(3, 2) - x(3, 3);
    CHECK(isotropy_at_origin(saddle).dimension() == 2);
    CHECK_THROWS_AS(isotropy_at_origin(saddle + Polynomial::constant(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(isotropy_at_origin(Polynomial(3)), std::invalid_argument);
}

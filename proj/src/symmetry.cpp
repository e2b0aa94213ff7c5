#include "cayley/symmetry.hpp"

#include <map>

namespace cayley {

AffineVectorField::AffineVectorField(std::size_t n) : constant_(n), linear_(n, n) {}

AffineVectorField::AffineVectorField(RationalVector constant, RationalMatrix linear)
    : constant_(std::move(constant)), linear_(std::move(linear)) {
    if (!linear_.is_square() || linear_.rows() != constant_.size())
        throw std::invalid_argument("vector field: constant and linear parts disagree on dimension");
}

AffineVectorField AffineVectorField::coordinate(std::size_t n, VarIndex j) {
    if (j < 1 || j > n) throw std::invalid_argument("coordinate field index out of range");
    AffineVectorField x(n);
    x.constant_[j - 1] = 1;
    return x;
}

bool AffineVectorField::is_zero() const {
    for (const auto& c : constant_)
        if (c != 0) return false;
    return linear_.is_zero();
}

Polynomial AffineVectorField::component(VarIndex j) const {
    const std::size_t n = dimension();
    Polynomial out = Polynomial::constant(n, constant_[j - 1]);
    for (std::size_t i = 0; i < n; ++i)
        out.add_term(Monomial::variable(static_cast<VarIndex>(i + 1)), linear_(i, j - 1));
    return out;
}

RationalVector AffineVectorField::coordinates() const {
    RationalVector out = constant_;
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(linear_(i, j));
    return out;
}

AffineVectorField AffineVectorField::from_coordinates(std::size_t n, const RationalVector& coords) {
    if (coords.size() != n + n * n) throw std::invalid_argument("field coordinates have the wrong length");
    AffineVectorField x(n);
    for (std::size_t j = 0; j < n; ++j) x.constant_[j] = coords[j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x.linear_(i, j) = coords[n + i * n + j];
    return x;
}

AffineVectorField operator+(const AffineVectorField& a, const AffineVectorField& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("vector field dimension mismatch");
    return {a.constant_ + b.constant_, a.linear_ + b.linear_};
}

AffineVectorField operator-(const AffineVectorField& a, const AffineVectorField& b) {
    return a + Rational(-1) * b;
}

AffineVectorField operator*(const Rational& s, const AffineVectorField& x) {
    return {s * x.constant_, s * x.linear_};
}

Polynomial apply_field(const AffineVectorField& x, const Polynomial& p) {
    if (x.dimension() != p.dimension())
        throw std::invalid_argument("apply_field: field dimension " + std::to_string(x.dimension()) +
                                    " vs polynomial dimension " + std::to_string(p.dimension()));
    Polynomial out(p.dimension());
    for (std::size_t j = 1; j <= p.dimension(); ++j) {
        const auto v = static_cast<VarIndex>(j);
        const Polynomial coeff = x.component(v);
        if (coeff.is_zero()) continue;
        const Polynomial dp = partial_derivative(p, v);
        if (dp.is_zero()) continue;
        out += coeff * dp;
    }
    return out;
}

std::vector<AffineVectorField> cayley_fields(unsigned n) {
    if (n < 2) throw std::invalid_argument("cayley_fields needs N >= 2");
    std::vector<AffineVectorField> fields;
    for (unsigned p = 1; p < n; ++p) {
        AffineVectorField x = AffineVectorField::coordinate(n, p);
        RationalMatrix shift(n, n);
        for (unsigned i = 0; i + p < n; ++i) shift(i, i + p) = 1;
        fields.emplace_back(x.constant(), std::move(shift));
    }
    return fields;
}

AffineVectorField euler_field(unsigned n) {
    RationalMatrix diag(n, n);
    for (unsigned h = 0; h < n; ++h) diag(h, h) = h + 1;
    return {RationalVector(n), std::move(diag)};
}

AffineVectorField commutator(const AffineVectorField& x, const AffineVectorField& y) {
    if (x.dimension() != y.dimension()) throw std::invalid_argument("commutator: dimension mismatch");
    // In column form X = a + A x, Y = b + B x with A = linear^T, the bracket
    // is (B a - A b) + (B A - A B) x.
    const RationalMatrix a_mat = x.linear().transpose();
    const RationalMatrix b_mat = y.linear().transpose();
    RationalVector constant = b_mat * x.constant() + Rational(-1) * (a_mat * y.constant());
    RationalMatrix linear = (b_mat * a_mat - a_mat * b_mat).transpose();
    return {std::move(constant), std::move(linear)};
}

AffineTransformation exp_field(const AffineVectorField& x, const Rational& t) {
    const std::size_t n = x.dimension();
    const RationalMatrix a = x.linear().transpose();
    if (!is_nilpotent(a))
        throw InexactExponential("exp_field: linear part is not nilpotent, flow is not exact over the rationals");

    // matrix = sum_k t^k A^k / k!, translation = sum_k t^(k+1) A^k c / (k+1)!.
    RationalMatrix matrix(n, n);
    RationalVector translation(n);
    RationalMatrix power = RationalMatrix::identity(n);
    Rational t_power = 1;
    Rational k_factorial = 1;
    for (std::size_t k = 0; k < n && !power.is_zero(); ++k) {
        if (k > 0) k_factorial *= static_cast<unsigned long>(k);
        matrix = matrix + (t_power / k_factorial) * power;
        translation = translation + (t_power * t / (k_factorial * (k + 1))) * (power * x.constant());
        power = power * a;
        t_power *= t;
    }
    return {std::move(matrix), std::move(translation)};
}

RationalVector orbit_point(unsigned n, const RationalVector& t) {
    if (t.size() + 1 != n) throw std::invalid_argument("orbit_point: expected N-1 parameters");
    AffineVectorField sum(n);
    const auto fields = cayley_fields(n);
    for (std::size_t p = 0; p < fields.size(); ++p)
        if (t[p] != 0) sum = sum + t[p] * fields[p];
    return exp_field(sum, 1).apply(RationalVector(n));
}

RationalVector parameters_for_point(unsigned n, const RationalVector& x) {
    if (x.size() + 1 != n) throw std::invalid_argument("parameters_for_point: expected N-1 coordinates");
    // Coordinate k of the orbit is t_k plus a polynomial in t_1..t_{k-1}.
    RationalVector t(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const RationalVector partial = orbit_point(n, t);
        t[k] = x[k] - partial[k];
    }
    return t;
}

namespace {

// Builds the linear system "coefficients of X p - c p vanish" with one
// column per unknown, given the polynomial contributed by each unknown.
RationalMatrix constraint_matrix(const std::vector<Polynomial>& columns) {
    std::map<Monomial, std::size_t, CanonicalOrder> row_of;
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms()) row_of.try_emplace(m, 0);
    std::size_t next = 0;
    for (auto& [m, r] : row_of) r = next++;

    RationalMatrix a(row_of.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].terms()) a(row_of.at(m), j) = c;
    return a;
}

SymmetryAlgebra solve_eigen_relation(const Polynomial& p, bool with_constant_part) {
    if (p.is_zero()) throw std::invalid_argument("symmetry solver: zero polynomial");
    const std::size_t n = p.dimension();

    std::vector<Polynomial> derivatives;
    for (std::size_t j = 1; j <= n; ++j) derivatives.push_back(partial_derivative(p, static_cast<VarIndex>(j)));

    std::vector<Polynomial> columns;
    columns.push_back(-p);
    if (with_constant_part)
        for (const auto& d : derivatives) columns.push_back(d);
    for (std::size_t i = 1; i <= n; ++i) {
        const Polynomial xi = Polynomial::variable(n, static_cast<VarIndex>(i));
        for (const auto& d : derivatives) columns.push_back(xi * d);
    }

    const auto kernel = nullspace(constraint_matrix(columns));

    SymmetryAlgebra algebra;
    for (const auto& v : kernel) {
        RationalVector coords(n + n * n);
        const std::size_t offset = with_constant_part ? 1 : 1 + n;
        for (std::size_t k = 1; k < v.size(); ++k) coords[k - 1 + (offset - 1)] = v[k];
        AffineVectorField field = AffineVectorField::from_coordinates(n, coords);
        if (apply_field(field, p) != v[0] * p) throw std::logic_error("symmetry solver produced an invalid field");
        algebra.basis.push_back(std::move(field));
        algebra.eigenvalues.push_back(v[0]);
    }
    return algebra;
}

} // namespace

SymmetryAlgebra symmetry_algebra(const Polynomial& p) { return solve_eigen_relation(p, true); }

SymmetryAlgebra isotropy_at_origin(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isotropy_at_origin: zero polynomial");
    if (p.constant_term() != 0) throw std::invalid_argument("isotropy_at_origin: origin is not on the hypersurface");
    return solve_eigen_relation(p, false);
}

std::size_t field_rank(const std::vector<AffineVectorField>& fields) {
    if (fields.empty()) return 0;
    std::vector<RationalVector> rows;
    for (const auto& f : fields) rows.push_back(f.coordinates());
    return rank(RationalMatrix::from_rows(rows));
}

bool span_contains(const std::vector<AffineVectorField>& basis, const std::vector<AffineVectorField>& candidates) {
    std::vector<AffineVectorField> combined = basis;
    combined.insert(combined.end(), candidates.begin(), candidates.end());
    return field_rank(combined) == field_rank(basis);
}

} // namespace cayley

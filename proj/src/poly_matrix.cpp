#include "cayley/poly_matrix.hpp"

#include <stdexcept>

namespace cayley {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t dimension)
    : rows_(rows), cols_(cols), dimension_(dimension), entries_(rows * cols, Polynomial(dimension)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t dimension) {
    PolyMatrix m(n, n, dimension);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(dimension, 1);
    return m;
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<Polynomial>> rows) {
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty polynomial matrix");
    const std::size_t cols = rows.front().size();
    const std::size_t dim = rows.front().front().dimension();
    PolyMatrix m(rows.size(), cols, dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged polynomial matrix");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c].dimension() != dim) throw std::invalid_argument("polynomial matrix dimension mismatch");
            m(r, c) = std::move(rows[r][c]);
        }
    }
    return m;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

Polynomial laplace(const PolyMatrix& m, std::vector<std::size_t>& rows_left, std::vector<std::size_t>& cols_left,
                   std::size_t depth) {
    if (cols_left.empty()) return Polynomial::constant(m.dimension(), 1);
    const std::size_t r = rows_left[depth];
    Polynomial total(m.dimension());
    for (std::size_t k = 0; k < cols_left.size(); ++k) {
        const std::size_t c = cols_left[k];
        if (m(r, c).is_zero()) continue;
        cols_left.erase(cols_left.begin() + static_cast<std::ptrdiff_t>(k));
        Polynomial minor = laplace(m, rows_left, cols_left, depth + 1);
        cols_left.insert(cols_left.begin() + static_cast<std::ptrdiff_t>(k), c);
        Polynomial term = m(r, c) * minor;
        if (k % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

bool simpler(const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.term_count() < b.term_count();
}

} // namespace

Polynomial cofactor_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<std::size_t> rows(m.rows());
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = cols[i] = i;
    return laplace(m, rows, cols, 0);
}

Polynomial determinant(const PolyMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n <= 3) return cofactor_determinant(input);

    PolyMatrix m = input;
    Polynomial previous = Polynomial::constant(m.dimension(), 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot on the simplest nonzero entry (lowest degree, then fewest
        // terms, then first row) so constant pivots are used when present.
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r) {
            if (m(r, k).is_zero()) continue;
            if (pivot == n || simpler(m(r, k), m(pivot, k))) pivot = r;
        }
        if (pivot == n) return Polynomial(m.dimension());
        if (pivot != k) {
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
            m(i, k) = Polynomial(m.dimension());
        }
        previous = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

PolyMatrix hessian(const Polynomial& f) {
    const std::size_t n = f.dimension();
    PolyMatrix h(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial fi = partial_derivative(f, static_cast<VarIndex>(i + 1));
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = partial_derivative(fi, static_cast<VarIndex>(j + 1));
            if (j != i) h(j, i) = h(i, j);
        }
    }
    return h;
}

} // namespace cayley

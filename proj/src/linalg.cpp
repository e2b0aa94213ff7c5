#include "cayley/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cayley {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    return a + Rational(-1) * b;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
    return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    RationalVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
    return out;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Clears denominators row by row; row scaling does not change the row space.
IntegerRows to_integer_rows(const RationalMatrix& a) {
    IntegerRows m(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < a.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c).get_num() * (lcm / a(r, c).get_den());
    }
    return m;
}

void remove_content(std::vector<Integer>& row, std::size_t from) {
    Integer g = 0;
    for (std::size_t j = from; j < row.size(); ++j)
        if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g > 1)
        for (std::size_t j = from; j < row.size(); ++j)
            if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

// Fraction-free forward elimination over the integers. Each update is
// row_i <- (p/g) row_i - (f/g) row_r with g = gcd(p, f), followed by removal
// of the row content, so entries stay small and rows that already have a
// zero in the pivot column are left untouched. Pivots are the first nonzero
// entry in column order.
EchelonInfo fraction_free_echelon(IntegerRows& m, std::size_t cols) {
    EchelonInfo info;
    const std::size_t rows = m.size();
    std::size_t r = 0;
    Integer g;
    Integer scale_row;
    Integer scale_pivot;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        remove_content(m[r], c);
        const Integer& p = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), m[i][c].get_mpz_t());
            mpz_divexact(scale_row.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(scale_pivot.get_mpz_t(), m[i][c].get_mpz_t(), g.get_mpz_t());
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (m[r][j] == 0) {
                    if (m[i][j] != 0) m[i][j] *= scale_row;
                    continue;
                }
                m[i][j] = scale_row * m[i][j] - scale_pivot * m[r][j];
            }
            m[i][c] = 0;
            remove_content(m[i], c + 1);
        }
        info.pivot_columns.push_back(c);
        ++r;
    }
    return info;
}

} // namespace

std::size_t rank(const RationalMatrix& a) {
    IntegerRows m = to_integer_rows(a);
    return fraction_free_echelon(m, a.cols()).rank();
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
    const std::size_t cols = a.cols();
    IntegerRows m = to_integer_rows(a);
    const EchelonInfo info = fraction_free_echelon(m, cols);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : info.pivot_columns) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        // Back substitution through the echelon rows, last pivot first.
        for (std::size_t k = info.rank(); k-- > 0;) {
            const std::size_t pc = info.pivot_columns[k];
            Rational sum = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (m[k][j] != 0 && v[j] != 0) sum += Rational(m[k][j]) * v[j];
            v[pc] = -sum / Rational(m[k][pc]);
        }
        auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        const Rational scale = *first;
        for (auto& x : v) x /= scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix m = a;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        const Rational p = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Rational determinant(const RationalMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    RationalMatrix m = a;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

bool is_nilpotent(const RationalMatrix& a) {
    if (!a.is_square()) return false;
    RationalMatrix power = a;
    for (std::size_t k = 1; k < a.rows(); ++k) power = power * a;
    return power.is_zero();
}

} // namespace cayley

#include "cayley/geometry.hpp"

#include "cayley/cayley.hpp"
#include "cayley/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayley {

SymmetricTensor::SymmetricTensor(unsigned order, std::size_t dimension) : order_(order), dimension_(dimension) {}

void SymmetricTensor::check_key(const Key& sorted) const {
    if (sorted.size() != order_) throw std::invalid_argument("tensor index count does not match order");
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > dimension_))
        throw std::invalid_argument("tensor index out of range");
}

Rational SymmetricTensor::at(Key indices) const {
    std::sort(indices.begin(), indices.end());
    check_key(indices);
    auto it = entries_.find(indices);
    return it == entries_.end() ? Rational(0) : it->second;
}

void SymmetricTensor::set(Key indices, const Rational& value) {
    std::sort(indices.begin(), indices.end());
    check_key(indices);
    if (value == 0)
        entries_.erase(indices);
    else
        entries_[indices] = value;
}

RationalMatrix SymmetricTensor::to_matrix() const {
    if (order_ != 2) throw std::invalid_argument("to_matrix needs an order-2 tensor");
    RationalMatrix m(dimension_, dimension_);
    for (const auto& [key, value] : entries_) {
        m(key[0] - 1, key[1] - 1) = value;
        m(key[1] - 1, key[0] - 1) = value;
    }
    return m;
}

SymmetricTensor SymmetricTensor::from_matrix(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("from_matrix needs a square matrix");
    SymmetricTensor t(2, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) throw std::invalid_argument("from_matrix needs a symmetric matrix");
            t.set({static_cast<VarIndex>(i + 1), static_cast<VarIndex>(j + 1)}, m(i, j));
        }
    return t;
}

namespace {

void multisets_rec(unsigned remaining, unsigned slots, VarIndex smallest, VarIndex largest,
                   SymmetricTensor::Key& prefix, SymmetricTensor& out) {
    if (slots == 0) {
        if (remaining == 0) out.set(prefix, 1);
        return;
    }
    for (VarIndex v = smallest; v <= largest && v * slots <= remaining; ++v) {
        prefix.push_back(v);
        multisets_rec(remaining - v, slots - 1, v, largest, prefix, out);
        prefix.pop_back();
    }
}

Rational orderings(const SymmetricTensor::Key& sorted) {
    Rational count = factorial(static_cast<unsigned>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        count /= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return count;
}

} // namespace

SymmetricTensor indicator_tensor(unsigned n, unsigned m) {
    if (n < 3 || m < 2) throw std::invalid_argument("indicator_tensor needs N >= 3 and m >= 2");
    SymmetricTensor t(m, n - 1);
    SymmetricTensor::Key prefix;
    multisets_rec(n, m, 1, n - 1, prefix, t);
    return t;
}

SymmetricTensor taylor_tensor(const Polynomial& f, unsigned m) {
    SymmetricTensor t(m, f.dimension());
    for (const auto& [mono, c] : f.terms()) {
        if (mono.total_degree() != m) continue;
        SymmetricTensor::Key key;
        for (const auto& [v, e] : mono.factors()) key.insert(key.end(), e, v);
        t.set(key, c / orderings(key));
    }
    return t;
}

SymmetricTensor metric_inverse(const SymmetricTensor& g) {
    return SymmetricTensor::from_matrix(inverse(g.to_matrix()));
}

SymmetricTensor trace(const SymmetricTensor& t, const SymmetricTensor& g_inv) {
    if (t.order() < 2) throw std::invalid_argument("trace needs a tensor of order >= 2");
    if (g_inv.order() != 2) throw std::invalid_argument("trace needs an order-2 metric");
    if (g_inv.dimension() != t.dimension()) throw std::invalid_argument("trace: dimension mismatch");

    // Each (K, i, j) with t^{ijK} != 0 corresponds to exactly one stored key
    // S = K + {i, j}, so walking stored keys and the ordered value pairs that
    // can be removed from them visits every term once.
    const RationalMatrix g = g_inv.to_matrix();
    std::map<SymmetricTensor::Key, Rational> sums;
    for (const auto& [key, value] : t.entries()) {
        SymmetricTensor::Key distinct = key;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (VarIndex u : distinct)
            for (VarIndex v : distinct) {
                if (g(u - 1, v - 1) == 0) continue;
                SymmetricTensor::Key rest = key;
                rest.erase(std::find(rest.begin(), rest.end(), u));
                auto it = std::find(rest.begin(), rest.end(), v);
                if (it == rest.end()) continue;
                rest.erase(it);
                sums[rest] += g(u - 1, v - 1) * value;
            }
    }
    SymmetricTensor out(t.order() - 2, t.dimension());
    for (const auto& [key, value] : sums) out.set(key, value);
    return out;
}

Rational pick_invariant(const SymmetricTensor& g, const SymmetricTensor& a) {
    if (g.order() != 2 || a.order() != 3) throw std::invalid_argument("pick_invariant needs orders 2 and 3");
    if (g.dimension() != a.dimension()) throw std::invalid_argument("pick_invariant: dimension mismatch");
    const std::size_t n = g.dimension();
    const RationalMatrix lower = inverse(g.to_matrix());

    std::vector<Rational> upper(n * n * n);
    auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                upper[idx(i, j, k)] = a.at({VarIndex(i + 1), VarIndex(j + 1), VarIndex(k + 1)});

    // Lower one slot at a time; each pass is an n^4 contraction.
    std::vector<Rational> current = upper;
    for (int slot = 0; slot < 3; ++slot) {
        std::vector<Rational> next(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& value = current[idx(i, j, k)];
                    if (value == 0) continue;
                    // Contract the first slot and rotate it to the back.
                    for (std::size_t l = 0; l < n; ++l)
                        if (lower(i, l) != 0) next[idx(j, k, l)] += lower(i, l) * value;
                }
        current = std::move(next);
    }
    Rational total = 0;
    for (std::size_t q = 0; q < current.size(); ++q)
        if (current[q] != 0 && upper[q] != 0) total += current[q] * upper[q];
    return total;
}

Signature signature(const RationalMatrix& input) {
    if (!input.is_square()) throw std::invalid_argument("signature needs a square matrix");
    RationalMatrix a = input;
    const std::size_t n = a.rows();
    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    Signature sig;

    auto eliminate = [&](auto&& update) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!active[r]) continue;
            for (std::size_t s = 0; s < n; ++s)
                if (active[s]) a(r, s) -= update(r, s);
        }
    };

    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (active[i] && a(i, i) != 0) pivot = i;
        if (pivot != n) {
            const Rational d = a(pivot, pivot);
            (d > 0 ? sig.positive : sig.negative)++;
            active[pivot] = false;
            --remaining;
            eliminate([&](std::size_t r, std::size_t s) { return Rational(a(r, pivot) * a(pivot, s) / d); });
            continue;
        }
        std::size_t pi = n;
        std::size_t pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[i] && active[j] && a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;
        // [[0, b], [b, 0]] has one positive and one negative eigenvalue.
        const Rational b = a(pi, pj);
        ++sig.positive;
        ++sig.negative;
        active[pi] = active[pj] = false;
        remaining -= 2;
        eliminate([&](std::size_t r, std::size_t s) {
            return Rational((a(r, pi) * a(pj, s) + a(r, pj) * a(pi, s)) / b);
        });
    }
    sig.zero = remaining;
    return sig;
}

Signature signature(const SymmetricTensor& g) { return signature(g.to_matrix()); }

Polynomial hessian_determinant(const Polynomial& f) { return determinant(hessian(f)); }

RulingReport ruling_check(const Polynomial& p) {
    const auto n = static_cast<unsigned>(p.dimension());
    if (n < 3) throw std::invalid_argument("ruling_check needs N >= 3");
    std::vector<VarIndex> block;
    for (VarIndex k = n / 2 + 1; k <= n; ++k) block.push_back(k);
    RulingReport report;
    report.plane_dimension = static_cast<unsigned>(block.size()) - 1;
    report.is_linear = p.degree_in(block) <= 1;
    return report;
}

RulingReport ruling_check(unsigned n) { return ruling_check(cayley_poly(n)); }

InvariantsBundle compute_invariants(const Polynomial& p) {
    const auto f = as_graph(p);
    if (!f) throw std::invalid_argument("invariants need a polynomial of the form -x_N + f(x_1..x_{N-1})");
    InvariantsBundle bundle;
    bundle.n = static_cast<unsigned>(p.dimension());
    const SymmetricTensor g = taylor_tensor(*f, 2);
    const SymmetricTensor a = taylor_tensor(*f, 3);
    bundle.signature = signature(g);
    if (bundle.signature.zero == 0) bundle.pick = pick_invariant(g, a);
    const Polynomial det = hessian_determinant(*f);
    bundle.hessian_det_constant = det.is_constant();
    if (bundle.hessian_det_constant) bundle.hessian_det_value = det.constant_term();
    bundle.ruling = ruling_check(p);
    return bundle;
}

} // namespace cayley

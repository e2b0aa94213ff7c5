#pragma once

#include "cayley/linalg.hpp"
#include "cayley/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cayley {

/// Fully symmetric tensor of order m over n index values (1..n). Entries are
/// keyed by the sorted index multiset; absent keys are zero.
class SymmetricTensor {
public:
    using Key = std::vector<VarIndex>;

    SymmetricTensor(unsigned order, std::size_t dimension);

    [[nodiscard]] unsigned order() const { return order_; }
    [[nodiscard]] std::size_t dimension() const { return dimension_; }
    [[nodiscard]] const std::map<Key, Rational>& entries() const { return entries_; }
    [[nodiscard]] bool is_zero() const { return entries_.empty(); }

    /// Indices in any order.
    [[nodiscard]] Rational at(Key indices) const;
    void set(Key indices, const Rational& value);

    /// order-2 tensor as an n x n matrix, and back.
    [[nodiscard]] RationalMatrix to_matrix() const;
    static SymmetricTensor from_matrix(const RationalMatrix& m);

    friend bool operator==(const SymmetricTensor&, const SymmetricTensor&) = default;

private:
    void check_key(const Key& sorted) const;
    unsigned order_;
    std::size_t dimension_;
    std::map<Key, Rational> entries_;
};

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

struct RulingReport {
    unsigned plane_dimension = 0;
    bool is_linear = false;
};

/// Entry 1 on every index multiset from {1..N-1} of size m summing to N.
SymmetricTensor indicator_tensor(unsigned n, unsigned m);

/// Symmetric T with deg-m part of f = sum over ordered tuples T^{i..} x_i..,
/// so each monomial coefficient is spread evenly over its orderings.
SymmetricTensor taylor_tensor(const Polynomial& f, unsigned m);

/// Throws std::domain_error when g is singular.
SymmetricTensor metric_inverse(const SymmetricTensor& g);

/// Contraction of two slots of t with g_inv: result^{K} = sum_ij g_ij t^{ijK}.
SymmetricTensor trace(const SymmetricTensor& t, const SymmetricTensor& g_inv);

/// sum g_il g_jm g_kn a^{ijk} a^{lmn}, with g_ij the inverse of the given g.
Rational pick_invariant(const SymmetricTensor& g, const SymmetricTensor& a);

/// Inertia by exact symmetric congruence; zero diagonals are handled with
/// 2x2 hyperbolic blocks.
Signature signature(const SymmetricTensor& g);
Signature signature(const RationalMatrix& g);

Polynomial hessian_determinant(const Polynomial& f);

/// Fixes x_1..x_{floor(N/2)} and checks p is at most linear in the rest.
RulingReport ruling_check(const Polynomial& p);
RulingReport ruling_check(unsigned n);

/// Summary of the invariants at the origin of a graph hypersurface -x_N + f.
struct InvariantsBundle {
    unsigned n = 0;
    Signature signature;
    std::optional<Rational> pick;
    bool hessian_det_constant = false;
    std::optional<Rational> hessian_det_value;
    RulingReport ruling;
};

/// Uses the exact Taylor tensors of the graph function. Throws
/// std::invalid_argument when p is not of graph form.
InvariantsBundle compute_invariants(const Polynomial& p);

} // namespace cayley

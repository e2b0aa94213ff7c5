#include "cayley/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cayley {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Factor> factors) : factors_(factors) { normalize(); }

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) { normalize(); }

Monomial Monomial::variable(VarIndex v, Exponent e) { return Monomial{{v, e}}; }

void Monomial::normalize() {
    for (const auto& [v, e] : factors_)
        if (v == 0) throw std::invalid_argument("variable indices are 1-based");
    std::sort(factors_.begin(), factors_.end());
    std::vector<Factor> merged;
    for (const auto& f : factors_) {
        if (!merged.empty() && merged.back().first == f.first)
            merged.back().second += f.second;
        else
            merged.push_back(f);
    }
    std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
    factors_ = std::move(merged);
}

Exponent Monomial::exponent(VarIndex v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned long Monomial::weighted_degree() const {
    unsigned long d = 0;
    for (const auto& [v, e] : factors_) d += static_cast<unsigned long>(v) * e;
    return d;
}

Monomial Monomial::without(VarIndex v) const {
    Monomial out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), Factor{v, 0});
    if (it == out.factors_.end() || it->first != v) throw std::logic_error("variable does not divide monomial");
    if (--it->second == 0) out.factors_.erase(it);
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return other.exponent(f.first) >= f.second; });
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    std::vector<Factor> out;
    for (const auto& [v, e] : other.factors_) {
        const Exponent mine = exponent(v);
        if (mine > e) throw std::logic_error("monomial does not divide");
        out.emplace_back(v, e - mine);
    }
    for (const auto& [v, e] : factors_)
        if (other.exponent(v) == 0) throw std::logic_error("monomial does not divide");
    return Monomial(std::move(out));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto& f = out.factors_;
    f.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            f.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            f.push_back(*j++);
        } else {
            f.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        // A smaller variable index present in only one monomial makes that one larger.
        if (fa[i].first != fb[i].first)
            return fa[i].first < fb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (fa[i].second != fb[i].second) return fa[i].second <=> fb[i].second;
    }
    if (fa.size() == fb.size()) return std::strong_ordering::equal;
    return i < fa.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    return lex_compare(a, b) == std::strong_ordering::greater;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
    return term(dimension, Monomial{}, c);
}

Polynomial Polynomial::variable(std::size_t dimension, VarIndex v) {
    return term(dimension, Monomial::variable(v), 1);
}

Polynomial Polynomial::term(std::size_t dimension, const Monomial& m, const Rational& c) {
    if (m.max_variable() > dimension) throw std::invalid_argument("variable index out of range");
    Polynomial p(dimension);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.total_degree());
}

unsigned Polynomial::degree_in(std::span<const VarIndex> variables) const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_) {
        unsigned d = 0;
        for (VarIndex v : variables) d += m.exponent(v);
        best = std::max(best, d);
    }
    return best;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
    Polynomial out(dimension_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.max_variable() > dimension_) throw std::invalid_argument("variable index out of range");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::embed(std::size_t new_dimension) const {
    if (new_dimension < dimension_) {
        for (const auto& [m, c] : terms_)
            if (m.max_variable() > new_dimension)
                throw std::invalid_argument("cannot embed: polynomial uses a dropped variable");
    }
    Polynomial out(new_dimension);
    out.terms_ = terms_;
    return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (dimension_ != other.dimension_)
        throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(dimension_) + " vs " +
                                    std::to_string(other.dimension_));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.dimension_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::constant(p.dimension(), 1);
    Polynomial base = p;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& p, VarIndex h) {
    if (h < 1 || h > p.dimension())
        throw std::invalid_argument("derivative index " + std::to_string(h) + " out of range");
    Polynomial out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        const Exponent e = m.exponent(h);
        if (e == 0) continue;
        out.add_term(m.without(h), c * e);
    }
    return out;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.dimension())
        throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(p.dimension()));
    Rational total = 0;
    Rational power;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (const auto& [v, e] : m.factors()) {
            mpz_pow_ui(power.get_num_mpz_t(), point[v - 1].get_num_mpz_t(), e);
            mpz_pow_ui(power.get_den_mpz_t(), point[v - 1].get_den_mpz_t(), e);
            value *= power;
        }
        total += value;
    }
    return total;
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.dimension()) throw std::invalid_argument("compose: wrong number of images");
    const std::size_t target = images.empty() ? 0 : images.front().dimension();
    for (const auto& img : images)
        if (img.dimension() != target) throw std::invalid_argument("compose: images disagree on dimension");

    // powers[v][e] caches images[v]^e, grown on demand.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](VarIndex v, Exponent e) -> const Polynomial& {
        auto& cache = powers[v - 1];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v - 1]);
        return cache[e];
    };

    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (const auto& [v, e] : m.factors()) term = term * power_of(v, e);
        out += term;
    }
    return out;
}

namespace {

// Leading monomial under graded lex: highest total degree, then lex-largest.
Polynomial::TermMap::const_iterator leading_term(const Polynomial& p) {
    auto best = p.terms().end();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
        if (best == p.terms().end() || it->first.total_degree() > best->first.total_degree() ||
            (it->first.total_degree() == best->first.total_degree() &&
             lex_compare(it->first, best->first) == std::strong_ordering::greater))
            best = it;
    }
    return best;
}

} // namespace

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (p.dimension() != d.dimension()) throw std::invalid_argument("polynomial dimension mismatch");
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto lead = leading_term(d);
    const Monomial& lead_mono = lead->first;
    const Rational lead_coef = lead->second;

    Polynomial quotient(p.dimension());
    Polynomial remainder = p;
    while (!remainder.is_zero()) {
        const auto top = leading_term(remainder);
        if (!lead_mono.divides(top->first)) throw std::domain_error("inexact polynomial division");
        const Polynomial step = Polynomial::term(p.dimension(), lead_mono.quotient_of(top->first), top->second / lead_coef);
        quotient += step;
        remainder -= step * d;
    }
    return quotient;
}

bool weighted_degree_check(const Polynomial& p, std::span<const unsigned> weights, long w) {
    if (weights.size() != p.dimension()) throw std::invalid_argument("weights length must equal dimension");
    for (const auto& [m, c] : p.terms()) {
        long total = 0;
        for (const auto& [v, e] : m.factors()) total += static_cast<long>(weights[v - 1]) * e;
        if (total != w) return false;
    }
    return true;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        bool need_star = false;
        if (magnitude != 1 || m.is_one()) {
            out << to_plain_string(magnitude);
            need_star = true;
        }
        for (const auto& [v, e] : m.factors()) {
            if (need_star) out << '*';
            out << 'x' << v;
            if (e > 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

} // namespace cayley

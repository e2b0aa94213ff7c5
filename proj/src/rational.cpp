#include "cayley/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cayley {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Rational result(parse_integer(num_text));
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        const Integer den = parse_integer(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        result = Rational(result.get_num(), den);
        result.canonicalize();
    }
    return result;
}

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_plain_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return to_fraction_string(value);
}

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace cayley

#include "cayley/json.hpp"

#include <stdexcept>

namespace cayley {

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::array();
        for (const auto& [v, e] : m.factors()) exps.push_back({v, e});
        terms.push_back({{"exps", std::move(exps)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"n", p.dimension()}, {"terms", std::move(terms)}};
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("invalid polynomial JSON: " + what);
}

Integer parse_decimal(const Json& j, const char* field) {
    if (!j.is_string()) schema_error(std::string(field) + " must be a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    if (s.find('/') != std::string::npos) schema_error(std::string(field) + " must be an integer");
    try {
        return parse_rational(s).get_num();
    } catch (const std::invalid_argument&) {
        schema_error(std::string(field) + " is not a decimal integer: '" + s + "'");
    }
}

} // namespace

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object()) schema_error("top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        schema_error("\"n\" must be a positive integer");
    if (!j.contains("terms") || !j["terms"].is_array()) schema_error("\"terms\" must be an array");
    const auto n = j["n"].get<std::size_t>();
    Polynomial p(n);
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("exps") || !term["exps"].is_array() || !term.contains("num") ||
            !term.contains("den"))
            schema_error("each term needs \"exps\", \"num\" and \"den\"");
        std::vector<Monomial::Factor> factors;
        for (const auto& pair : term["exps"]) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
                schema_error("exponent entries must be [var, exp] integer pairs");
            const auto var = pair[0].get<long long>();
            const auto exp = pair[1].get<long long>();
            if (var < 1 || static_cast<std::size_t>(var) > n) schema_error("variable index out of range");
            if (exp < 0) schema_error("negative exponent");
            factors.emplace_back(static_cast<VarIndex>(var), static_cast<Exponent>(exp));
        }
        const Integer num = parse_decimal(term["num"], "num");
        const Integer den = parse_decimal(term["den"], "den");
        if (den == 0) schema_error("zero denominator");
        Rational c(num, den);
        c.canonicalize();
        p.add_term(Monomial(std::move(factors)), c);
    }
    return p;
}

Json field_to_json(const AffineVectorField& x, const Rational& eigenvalue) {
    const std::size_t n = x.dimension();
    Json constant = Json::array();
    for (const auto& c : x.constant()) constant.push_back(to_fraction_string(c));
    Json linear = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(to_fraction_string(x.linear()(i, j)));
        linear.push_back(std::move(row));
    }
    return {{"n", n}, {"constant", std::move(constant)}, {"linear", std::move(linear)},
            {"eigenvalue", to_fraction_string(eigenvalue)}};
}

Json algebra_to_json(const SymmetryAlgebra& algebra) {
    Json fields = Json::array();
    for (std::size_t k = 0; k < algebra.dimension(); ++k)
        fields.push_back(field_to_json(algebra.basis[k], algebra.eigenvalues[k]));
    return {{"dimension", algebra.dimension()}, {"basis", std::move(fields)}};
}

Json invariants_to_json(const InvariantsBundle& bundle) {
    Json out;
    out["n"] = bundle.n;
    out["signature"] = {{"pos", bundle.signature.positive}, {"neg", bundle.signature.negative},
                        {"zero", bundle.signature.zero}};
    out["pick"] = bundle.pick ? Json(to_fraction_string(*bundle.pick)) : Json(nullptr);
    out["hessian_det_constant"] = bundle.hessian_det_constant;
    out["hessian_det_value"] =
        bundle.hessian_det_value ? Json(to_fraction_string(*bundle.hessian_det_value)) : Json(nullptr);
    out["ruling"] = {{"dim", bundle.ruling.plane_dimension}, {"linear", bundle.ruling.is_linear}};
    return out;
}

} // namespace cayley

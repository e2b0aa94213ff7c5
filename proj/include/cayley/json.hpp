#pragma once

#include "cayley/geometry.hpp"
#include "cayley/polynomial.hpp"
#include "cayley/symmetry.hpp"

#include <json.hpp>

namespace cayley {

using Json = nlohmann::ordered_json;

/// {"n": N, "terms": [{"exps": [[var, exp], ...], "num": "...", "den": "..."}]}
/// with terms in canonical print order.
Json polynomial_to_json(const Polynomial& p);
/// Throws std::invalid_argument on any schema violation.
Polynomial polynomial_from_json(const Json& j);

/// {"n": N, "constant": [...], "linear": [[...]], "eigenvalue": "..."} with
/// every rational written as a "num/den" string.
Json field_to_json(const AffineVectorField& x, const Rational& eigenvalue);
Json algebra_to_json(const SymmetryAlgebra& algebra);

/// {n, signature: {pos, neg, zero}, pick, hessian_det_constant,
///  hessian_det_value, ruling: {dim, linear}}; absent values are null.
Json invariants_to_json(const InvariantsBundle& bundle);

} // namespace cayley

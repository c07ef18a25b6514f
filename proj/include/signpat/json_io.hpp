#pragma once

#include "signpat/realizers.hpp"
#include "signpat/verifiers.hpp"

#include <json.hpp>

namespace signpat {

using nlohmann::json;

// Schemas:
//   pattern     {"n": int, "rows": ["++0000", ...]}
//   matrix      {"n": int, "entries": [[...], ...]}   numbers, or "p/q" strings
//   polynomial  {"coeffs": [c0, c1, ..., 1]}          numbers, or "p/q" strings
// Malformed documents raise PreconditionError.

json to_json(const SignPattern& p);
SignPattern pattern_from_json(const json& j);

json to_json(const FloatMatrix& m);
json to_json(const RationalMatrix& m);
FloatMatrix float_matrix_from_json(const json& j);
RationalMatrix rational_matrix_from_json(const json& j);

json to_json(const FloatPolynomial& p);
json to_json(const RationalPolynomial& p);
/// Numbers and "p/q" strings are both accepted; numbers convert exactly.
RationalPolynomial rational_polynomial_from_json(const json& j);
/// Strings are parsed as rationals and rounded.
FloatPolynomial float_polynomial_from_json(const json& j);
/// True if any coefficient is written as a string.
bool polynomial_json_is_rational(const json& j);

json to_json(const RefinedInertia& nu);
json to_json(const std::vector<Quadratic<double>>& quads);
json to_json(const RealizationPlan& plan);
json to_json(const RealizationReport<double>& rep);
json to_json(const RealizationReport<Rational>& rep);
json to_json(const IdentityCheckReport& rep);
json to_json(const Obs12Report& rep);
json to_json(const PartReport& rep);
json to_json(const TheoremReport& rep);
json to_json(const InertiaTDRealization& rep);

}  // namespace signpat

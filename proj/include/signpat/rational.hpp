#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace signpat {

/// Arbitrary-precision rational, always kept in canonical (reduced, positive
/// denominator) form.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "p/q", including q == 1.
std::string format_rational(const Rational& value);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

inline Rational abs_value(const Rational& value) { return abs(value); }
inline double abs_value(double value) { return std::fabs(value); }

/// Returns some s >= sqrt(max(value, 0)). On the rational backend s is the
/// smallest integer with s*s >= ceil(value), which keeps closed-form
/// parameter bounds rational.
Rational sqrt_upper(const Rational& value);
double sqrt_upper(double value);

/// sign in {-1, 0, 1}
inline int sign_of(const Rational& value) { return sgn(value); }
inline int sign_of(double value) { return (value > 0.0) - (value < 0.0); }

/// Best rational approximation with denominator <= max_den (continued
/// fractions).
Rational rationalize(double value, long max_den);

}  // namespace signpat

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace exform {

/// Exact scalar used throughout the algebraic core.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

/// Parses "7", "-3/4" or a terminating decimal such as "0.25".
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q" with q > 1, or "p".
std::string to_string(const Rational& x);

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

}  // namespace exform

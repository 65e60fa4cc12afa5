#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace snc {

/// Arbitrary-precision rational, always kept in canonical (lowest-terms,
/// positive denominator) form by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p` or `p/q` where p and q are unsigned decimal integers and q >= 1.
/// A leading '-' is accepted so callers can report negative weights with a
/// precise message rather than a syntax error. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace snc

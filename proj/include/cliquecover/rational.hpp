#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliquecover {

/// Exact rational number. Always kept in canonical form (reduced, positive
/// denominator); every arithmetic helper in this library canonicalizes.
using Rational = mpq_class;

/// Parses "a", "a/b" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// "num/den", with "/1" kept so output is uniform.
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Integer power of a rational, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace cliquecover

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nodepoly {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
inline Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Rational pow_rational(const Rational& q, int n) {
  Rational out(1);
  for (int i = 0; i < n; ++i) out *= q;
  return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace nodepoly

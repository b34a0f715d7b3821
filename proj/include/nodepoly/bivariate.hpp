#pragma once

#include <utility>
#include <vector>

#include "nodepoly/polynomial.hpp"

namespace nodepoly {

struct XYVars {
  static constexpr std::array<std::string_view, 2> kNames{"x", "y"};
  static constexpr std::array<int, 2> kWeights{1, 1};
};
using BiPoly = Polynomial<XYVars>;

inline BiPoly parse_bipoly(std::string_view text) { return parse_polynomial<XYVars>(text); }

/// Dense univariate polynomial over Q: coefficient of t^i at index i, no
/// trailing zeros (the zero polynomial is empty).
using UPoly = std::vector<Rational>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
Rational evaluate(const UPoly& p, const Rational& t);
UPoly derivative(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
/// Monic greatest common divisor (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Yun's algorithm: monic squarefree factors f_i with multiplicity i, p = c * prod f_i^i.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
/// Rational roots of a nonzero polynomial, each listed once, increasing.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace upoly

/// f(x + a, y + b).
BiPoly translate(const BiPoly& f, const Rational& a, const Rational& b);
BiPoly partial_derivative(const BiPoly& f, std::size_t var);
/// Greatest common divisor in Q[x, y], normalized to leading coefficient 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// True iff f is nonzero and has no repeated factor.
bool is_squarefree(const BiPoly& f);

}  // namespace nodepoly

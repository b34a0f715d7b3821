#pragma once

// Intersection-class algebra on a family of surfaces F/Y: polynomials in
// v = c1(O(D)), w1, w2 = Chern classes of the relative cotangent sheaf, and the
// exceptional class e of the blown-up fibre square.

#include <array>
#include <string_view>

#include "nodepoly/polynomial.hpp"

namespace nodepoly {

struct ClassVars {
  static constexpr std::array<std::string_view, 4> kNames{"v", "w1", "w2", "e"};
  static constexpr std::array<int, 4> kWeights{1, 1, 2, 1};
};

struct NodeVars {
  static constexpr std::array<std::string_view, 4> kNames{"d", "k", "s", "x"};
  static constexpr std::array<int, 4> kWeights{1, 1, 1, 1};
};

using ClassPoly = Polynomial<ClassVars>;
using NodePolynomial = Polynomial<NodeVars>;

namespace cls {
inline constexpr std::size_t kV = 0;
inline constexpr std::size_t kW1 = 1;
inline constexpr std::size_t kW2 = 2;
inline constexpr std::size_t kE = 3;
inline ClassPoly v() { return ClassPoly::variable(kV); }
inline ClassPoly w1() { return ClassPoly::variable(kW1); }
inline ClassPoly w2() { return ClassPoly::variable(kW2); }
inline ClassPoly e() { return ClassPoly::variable(kE); }
}  // namespace cls

inline ClassPoly parse_class_poly(std::string_view text) { return parse_polynomial<ClassVars>(text); }
inline NodePolynomial parse_node_polynomial(std::string_view text) { return parse_polynomial<NodeVars>(text); }

/// Reduces modulo e^3 + w1 e^2 + w2 e = 0; the result has e-degree <= 2.
ClassPoly reduce_e(const ClassPoly& p);

/// Top Chern class of the sheaf of relative principal parts P^{i-1}(D) for
/// i in {2,3,4}, i.e. the class [X_i] of points where the fibre curve has
/// multiplicity >= i.  Computed from formal Chern roots of the cotangent sheaf.
ClassPoly chern_xclass(int i);

/// Qx_i: on v^a w1^b w2^c expand (v - i e)^a (w1 + e)^b (w2 - e^2)^c, reduce,
/// and return minus the e^2 coefficient; extended linearly.
/// Throws std::invalid_argument if p involves e or i is not in 2..4.
ClassPoly qx(int i, const ClassPoly& p);

/// Pushforward to the base for the product family S x |L|, dropping the
/// power of the hyperplane class: v^a w1^b w2^c maps to C(a,2) d, a k, s, x for
/// (b,c) = (0,0), (1,0), (2,0), (0,1) and to zero otherwise.
/// Throws std::invalid_argument on inhomogeneous input or input involving e.
NodePolynomial pushforward_to_surface(const ClassPoly& p);

/// Same rule applied to one monomial in v, w1, w2 (no homogeneity check).
NodePolynomial pushforward_monomial(int a, int b, int c);

}  // namespace nodepoly

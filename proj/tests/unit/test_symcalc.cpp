#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodepoly/engine.hpp"
#include "nodepoly/symcalc.hpp"

using namespace nodepoly;
using cls::e;
using cls::v;
using cls::w1;
using cls::w2;

TEST_CASE("ring operations") {
  CHECK((v() + w1()).pow(2) == v() * v() + v() * w1() * Rational(2) + w1() * w1());
  CHECK((v() * v() + w2()) * ClassPoly() == ClassPoly());
  const ClassPoly diff = (v() * v() + w2()) - v() * v();
  CHECK(diff == w2());
  CHECK(diff.size() == 1);
}

TEST_CASE("rendering and parsing round-trip") {
  const NodePolynomial p = parse_node_polynomial("3d+2k+x");
  CHECK(p.to_string() == "3d + 2k + x");
  const ClassPoly q = v().pow(2) * w1() / Rational(2) - w2() * Rational(3, 4);
  CHECK(q.to_string() == "1/2v^2*w1 - 3/4w2");
  CHECK(parse_class_poly(q.to_string()) == q);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_node_polynomial("3q"), std::invalid_argument);
}

TEST_CASE("reduce_e") {
  CHECK(reduce_e(e().pow(3)) == -w1() * e().pow(2) - w2() * e());
  CHECK(reduce_e(e().pow(2)) == e().pow(2));
  CHECK(reduce_e(e().pow(4)) == (w1().pow(2) - w2()) * e().pow(2) + w1() * w2() * e());
  const ClassPoly p = (v() - e() * Rational(3)).pow(5) * (w1() + e());
  CHECK(reduce_e(reduce_e(p)) == reduce_e(p));
  CHECK(reduce_e(p).max_exponent(cls::kE) <= 2);
}

TEST_CASE("chern_xclass from Chern roots matches the reference classes") {
  for (int i = 2; i <= 4; ++i) {
    const ClassPoly x = chern_xclass(i);
    CHECK(x == reference::xclass(i));
    CHECK(x.is_homogeneous());
    CHECK(x.degree() == i * (i + 1) / 2);
  }
  CHECK(chern_xclass(2) == v().pow(3) + w1() * v().pow(2) + v() * w2());
  CHECK_THROWS_AS(chern_xclass(5), std::invalid_argument);
}

TEST_CASE("qx") {
  CHECK(qx(2, ClassPoly(1)) == ClassPoly());
  CHECK(qx(3, w2()) == ClassPoly(1));
  CHECK(qx(2, v().pow(3)) == v() * Rational(-12) - w1() * Rational(8));
  CHECK_THROWS_AS(qx(2, e()), std::invalid_argument);
  const ClassPoly p = chern_xclass(3);
  CHECK(qx(4, p).degree() == p.degree() - 2);
}

TEST_CASE("pushforward_to_surface") {
  CHECK(pushforward_to_surface(chern_xclass(2)) == parse_node_polynomial("3d+2k+x"));
  CHECK(pushforward_to_surface(chern_xclass(3)) == parse_node_polynomial("15d+20k+5s+5x"));
  CHECK(pushforward_to_surface(w1().pow(3)).is_zero());
  CHECK(pushforward_to_surface(w1() * w2()).is_zero());
  CHECK_THROWS_AS(pushforward_to_surface(v() + v().pow(2)), std::invalid_argument);
  CHECK_THROWS_AS(pushforward_to_surface(e().pow(2)), std::invalid_argument);
}

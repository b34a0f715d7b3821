#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nodepoly/surfaces.hpp"

using namespace nodepoly;

TEST_CASE("chern numbers") {
  CHECK(chern_numbers(SurfaceSpec::projective_plane(3)) == ChernNumbers{9, -9, 9, 3});
  CHECK(chern_numbers(SurfaceSpec::quadric(1, 1)) == ChernNumbers{2, -4, 8, 4});
  CHECK(chern_numbers(SurfaceSpec::raw({5, -7, 2, 11})) == ChernNumbers{5, -7, 2, 11});
  CHECK(chern_numbers(parse_surface("p2:4")) == ChernNumbers{16, -12, 9, 3});
  CHECK(chern_numbers(parse_surface("quadric:2,3")) == ChernNumbers{12, -10, 8, 4});
  CHECK(chern_numbers(parse_surface("raw:1,-2,3,-4")) == ChernNumbers{1, -2, 3, -4});
  CHECK_THROWS_AS(SurfaceSpec::projective_plane(0), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::quadric(1, 0), std::invalid_argument);
  for (const char* bad : {"p2", "p2:0", "p2:x", "quadric:1", "raw:1,2,3", "raw:1/2,0,0,0", "cubic:3"})
    CHECK_THROWS_AS(parse_surface(bad), std::invalid_argument);
  CHECK(parse_surface("quadric:2,3").to_string() == "quadric:2,3");
}

TEST_CASE("evaluation") {
  const NodePolynomials np = node_polynomials(3);
  const NodePolynomial& n1 = np.counts[0];
  CHECK(n1 == parse_node_polynomial("3d + 2k + x"));
  CHECK(evaluate(n1, chern_numbers(SurfaceSpec::projective_plane(3))) == 12);
  for (long m = 1; m <= 20; ++m)
    CHECK(evaluate(n1, chern_numbers(SurfaceSpec::projective_plane(m))) == 3 * (m - 1) * (m - 1));
  const NodePolynomial n3 = reference::singular_formulas()[0].value;
  CHECK(evaluate(n3, chern_numbers(SurfaceSpec::projective_plane(1))) == 15);
  // classical Severi degrees of plane quartics and quintics
  CHECK(evaluate(np.counts[1], chern_numbers(SurfaceSpec::projective_plane(4))) == 225);
  CHECK(evaluate(np.counts[2], chern_numbers(SurfaceSpec::projective_plane(4))) == 675);
  CHECK(evaluate(np.counts[2], chern_numbers(SurfaceSpec::projective_plane(5))) == 7915);
}

TEST_CASE("ampleness threshold") {
  CHECK(ampleness_threshold(2, 6).within_regime);
  CHECK_FALSE(ampleness_threshold(8, 23).within_regime);
  CHECK(ampleness_threshold(1, 3).within_regime);
  CHECK_FALSE(ampleness_threshold(1, std::nullopt).within_regime);
  CHECK_THROWS_AS(ampleness_threshold(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ampleness_threshold(9, 30), std::invalid_argument);
  CHECK(ampleness_twist(SurfaceSpec::quadric(4, 7)) == 4);
  CHECK(ampleness_twist(SurfaceSpec::projective_plane(5)) == 5);
  CHECK_FALSE(ampleness_twist(SurfaceSpec::raw({1, 2, 3, 4})).has_value());
}

TEST_CASE("sequence consistency") {
  const ConsistencyReport r1 = consistency_report(1);
  REQUIRE(r1.terms.size() == 1);
  CHECK(r1.total == node_polynomials(1).counts[0]);
  const ConsistencyReport r4 = consistency_report(4);
  REQUIRE(r4.terms.size() == 2);
  CHECK(r4.terms[0].coefficient == 24);
  CHECK(r4.terms[1].coefficient == 6);
  CHECK(r4.terms[1].name == "N(3)");
  CHECK(r4.total == node_polynomials(4).counts[3] * Rational(24) + reference::singular_formulas()[0].value * Rational(6));
  const ConsistencyReport r7 = consistency_report(7);
  REQUIRE(r7.terms.size() == 4);
  std::vector<Integer> coefficients;
  for (const auto& t : r7.terms) {
    coefficients.push_back(t.coefficient);
    CHECK(t.coefficient == t.enumerated);
  }
  CHECK(coefficients == std::vector<Integer>{5040, 1260, 210, 30});
  CHECK(r7.coefficients_match);
  CHECK_THROWS_AS(consistency_report(8), std::invalid_argument);
}

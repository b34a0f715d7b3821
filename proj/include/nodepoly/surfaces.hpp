#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nodepoly/engine.hpp"

namespace nodepoly {

/// d = L.L, k = L.K, s = K.K, x = c2 for a line bundle L on a surface.
struct ChernNumbers {
  Integer d, k, s, x;
  friend bool operator==(const ChernNumbers&, const ChernNumbers&) = default;
};

struct SurfaceSpec {
  enum class Kind { kProjectivePlane, kQuadric, kRaw };
  Kind kind = Kind::kProjectivePlane;
  std::vector<Integer> params;  // m; a, b; or d, k, s, x

  static SurfaceSpec projective_plane(long m);
  static SurfaceSpec quadric(long a, long b);
  static SurfaceSpec raw(const ChernNumbers& c);
  std::string to_string() const;
};

/// "p2:m", "quadric:a,b" or "raw:d,k,s,x"; std::invalid_argument otherwise.
SurfaceSpec parse_surface(std::string_view text);

/// O(m) on P^2 gives (m^2, -3m, 9, 3); O(a,b) on P^1 x P^1 gives (2ab, -2a-2b, 8, 4).
ChernNumbers chern_numbers(const SurfaceSpec& spec);

/// Largest m with L = M^m (x) N for M very ample and N spanned, using the
/// hyperplane bundle on P^2 and O(1,1) on the quadric; none for raw data.
std::optional<long> ampleness_twist(const SurfaceSpec& spec);

Rational evaluate(const NodePolynomial& p, const ChernNumbers& c);

struct AmplenessReport {
  int r = 0;
  std::optional<long> m;
  bool within_regime = false;  // m >= 3r; false when m is unknown
  std::string to_string() const;
};

/// Throws std::invalid_argument unless 1 <= r <= 8.
AmplenessReport ampleness_threshold(int r, std::optional<long> m);

struct SequenceTerm {
  Integer coefficient;        // number of orderings per curve
  std::string name;           // "N_r", "N(3)", ...
  NodePolynomial polynomial;  // the count it multiplies
  std::string witness_germ;   // germ the enumerator was run on
  Integer enumerated;         // enumerator's count on that germ
};

struct ConsistencyReport {
  int r = 0;
  std::vector<SequenceTerm> terms;
  NodePolynomial total;  // N(2^[r]) = sum of coefficient * polynomial
  bool coefficients_match = false;
  std::string to_string() const;
};

/// Assembles the number of node sequences of length r (1 <= r <= 7) from N_r
/// and the singular-point polynomials, and recounts every coefficient with
/// count_node_sequences on a split-form germ of the corresponding type.
/// Throws MismatchError when a coefficient disagrees with its recount.
ConsistencyReport consistency_report(int r);

}  // namespace nodepoly

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodepoly/bivariate.hpp"
#include "nodepoly/diagram.hpp"

namespace nodepoly {

class ResolveError : public std::runtime_error {
 public:
  enum class Kind {
    kNotReduced,        // repeated factor
    kNotOnCurve,        // the germ does not vanish at the origin
    kIrrationalCenter,  // a required center has irrational coordinates
    kInfinite,          // infinitely many candidate centers
    kNotIsolated,       // Milnor number does not stabilize
    kLimit,             // depth or coefficient-size bound exceeded
  };
  ResolveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A plane curve germ at the origin: a polynomial in x, y vanishing at (0, 0).
BiPoly parse_germ(std::string_view text);

/// The germ of f at (a, b), moved to the origin.
BiPoly localize(const BiPoly& f, const Rational& a, const Rational& b);

/// Germs at distinct points of one curve, each moved to the origin.
struct MultiGerm {
  std::vector<BiPoly> germs;
};

struct PlacedGerm {
  BiPoly germ;  // germ at the origin
  Rational a;   // placed at (a, b)
  Rational b;
};

/// Multiplies the translated germs f_i(x - a_i, y - b_i) and localizes the
/// product at every (a_i, b_i); the other factors become units there, so
/// each placement must avoid the other germs' curves.
MultiGerm multigerm_from_product(const std::vector<PlacedGerm>& placed);

struct ResolveOptions {
  int max_depth = 64;                  // bound on the length of a chain of blowups
  std::size_t max_coefficient_bits = 1U << 16;
};

/// An infinitely near point met while resolving.
struct TracePoint {
  int id = 0;
  std::optional<int> parent;
  std::optional<int> remote;  // the other exceptional curve through the point
  int multiplicity = 0;       // of the strict transform
  int total_transform_coefficient = 0;  // of this point's exceptional curve in the total transform
  std::string center;         // chart and coordinate of the center in its parent's blowup
  bool essential = false;
};

struct ResolutionTrace {
  std::vector<TracePoint> points;
  int branches = 0;
};

struct Resolution {
  ResolutionTrace trace;
  Diagram diagram;  // essential points only
};

/// Blows up until every branch is smooth and transverse to the exceptional
/// configuration, then keeps the essential points.
Resolution resolve_germ(const BiPoly& germ, const ResolveOptions& options = {});

struct GermReport {
  Diagram diagram;
  int mu = 0;
  int delta = 0;
  int branches = 0;
  int sing_points = 0;
};

/// mu, delta from the diagram; branches counted on the trace; the identity
/// mu = 2 delta - branches + sing_points is checked (std::logic_error if not).
GermReport germ_characters(const BiPoly& germ, const ResolveOptions& options = {});
GermReport germ_characters(const MultiGerm& germs, const ResolveOptions& options = {});

/// Local Milnor number dim Q[x,y]_(x,y) / (f_x, f_y), via truncations by
/// powers of the maximal ideal until the dimension stabilizes.
int milnor_oracle(const BiPoly& germ, int max_cutoff = 256);

/// Number of ordered sequences (x_1, ..., x_r) where x_1 has multiplicity >= 2
/// on the current divisor D and (x_2, ..., x_r) is such a sequence for
/// (total transform of D) - 2E on the blowup at x_1. Only points infinitely
/// near the given germs are considered.
Integer count_node_sequences(const MultiGerm& germs, int r);
Integer count_node_sequences(const BiPoly& germ, int r);

}  // namespace nodepoly

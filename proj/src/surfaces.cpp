#include "nodepoly/surfaces.hpp"

#include <sstream>

#include "nodepoly/resolve.hpp"

namespace nodepoly {

namespace {

long positive_parameter(std::string_view text) {
  std::size_t used = 0;
  const std::string s(text);
  long value = 0;
  try {
    value = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || value < 1)
    throw std::invalid_argument("expected a positive integer, got '" + s + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    text.remove_prefix(pos + 1);
  }
}

}  // namespace

SurfaceSpec SurfaceSpec::projective_plane(long m) {
  if (m < 1) throw std::invalid_argument("projective plane twist must be >= 1");
  return {Kind::kProjectivePlane, {Integer(m)}};
}

SurfaceSpec SurfaceSpec::quadric(long a, long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("quadric bidegree entries must be >= 1");
  return {Kind::kQuadric, {Integer(a), Integer(b)}};
}

SurfaceSpec SurfaceSpec::raw(const ChernNumbers& c) { return {Kind::kRaw, {c.d, c.k, c.s, c.x}}; }

std::string SurfaceSpec::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::kProjectivePlane: out = "p2:"; break;
    case Kind::kQuadric: out = "quadric:"; break;
    case Kind::kRaw: out = "raw:"; break;
  }
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + params[i].get_str();
  return out;
}

SurfaceSpec parse_surface(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("surface must look like p2:m, quadric:a,b or raw:d,k,s,x");
  const std::string_view kind = text.substr(0, colon);
  const auto fields = split(text.substr(colon + 1), ',');
  if (kind == "p2" && fields.size() == 1) return SurfaceSpec::projective_plane(positive_parameter(fields[0]));
  if (kind == "quadric" && fields.size() == 2)
    return SurfaceSpec::quadric(positive_parameter(fields[0]), positive_parameter(fields[1]));
  if (kind == "raw" && fields.size() == 4) {
    std::array<Integer, 4> v;
    for (std::size_t i = 0; i < 4; ++i) {
      const Rational q = parse_rational(fields[i]);
      if (!is_integer(q)) throw std::invalid_argument("raw Chern numbers must be integers");
      v[i] = q.get_num();
    }
    return SurfaceSpec::raw({v[0], v[1], v[2], v[3]});
  }
  throw std::invalid_argument("unrecognized surface '" + std::string(text) + "'");
}

ChernNumbers chern_numbers(const SurfaceSpec& spec) {
  switch (spec.kind) {
    case SurfaceSpec::Kind::kProjectivePlane: {
      const Integer& m = spec.params.at(0);
      if (m < 1) throw std::invalid_argument("projective plane twist must be >= 1");
      return {m * m, -3 * m, 9, 3};
    }
    case SurfaceSpec::Kind::kQuadric: {
      const Integer& a = spec.params.at(0);
      const Integer& b = spec.params.at(1);
      if (a < 1 || b < 1) throw std::invalid_argument("quadric bidegree entries must be >= 1");
      return {2 * a * b, -2 * a - 2 * b, 8, 4};
    }
    case SurfaceSpec::Kind::kRaw:
      if (spec.params.size() != 4) throw std::invalid_argument("raw surface needs d, k, s, x");
      return {spec.params[0], spec.params[1], spec.params[2], spec.params[3]};
  }
  throw std::logic_error("unhandled surface kind");
}

std::optional<long> ampleness_twist(const SurfaceSpec& spec) {
  switch (spec.kind) {
    case SurfaceSpec::Kind::kProjectivePlane: return spec.params.at(0).get_si();
    case SurfaceSpec::Kind::kQuadric: return std::min(spec.params.at(0), spec.params.at(1)).get_si();
    case SurfaceSpec::Kind::kRaw: return std::nullopt;
  }
  return std::nullopt;
}

Rational evaluate(const NodePolynomial& p, const ChernNumbers& c) {
  const std::array<Rational, 4> values{Rational(c.d), Rational(c.k), Rational(c.s), Rational(c.x)};
  Rational out = 0;
  for (const auto& [e, coef] : p.terms()) {
    Rational term = coef;
    for (std::size_t i = 0; i < 4; ++i) term *= pow_rational(values[i], e[i]);
    out += term;
  }
  return out;
}

std::string AmplenessReport::to_string() const {
  if (!m) return "m unknown; validity regime m >= " + std::to_string(3 * r) + " not checked";
  return "m = " + std::to_string(*m) + (within_regime ? " >= " : " < ") + std::to_string(3 * r) +
         (within_regime ? " (within the validity regime)" : " (outside the validity regime)");
}

AmplenessReport ampleness_threshold(int r, std::optional<long> m) {
  if (r < 1 || r > 8) throw std::invalid_argument("r must be between 1 and 8");
  return {r, m, m.has_value() && *m >= 3L * r};
}

std::string ConsistencyReport::to_string() const {
  std::ostringstream out;
  out << "N(2^[" << r << "]) =";
  for (std::size_t i = 0; i < terms.size(); ++i)
    out << (i ? " + " : " ") << terms[i].coefficient.get_str() << " " << terms[i].name;
  out << "\n";
  for (const auto& t : terms)
    out << "  " << t.name << ": coefficient " << t.coefficient.get_str() << ", enumerated " << t.enumerated.get_str()
        << " on " << t.witness_germ << "\n";
  out << "  = " << total.to_string() << "\n";
  return out.str();
}

namespace {

MultiGerm with_nodes(const std::string& germ, int nodes) {
  std::vector<PlacedGerm> placed;
  if (!germ.empty()) placed.push_back({parse_germ(germ), 0, 0});
  for (int i = 1; i <= nodes; ++i) placed.push_back({parse_germ("x*y"), i, 3 * i});
  return multigerm_from_product(placed);
}

std::string describe(const std::string& germ, int nodes) {
  std::string out = germ.empty() ? "" : germ;
  if (nodes > 0) out += (out.empty() ? "" : " + ") + std::to_string(nodes) + " nodes";
  return out;
}

}  // namespace

ConsistencyReport consistency_report(int r) {
  if (r < 1 || r > 7) throw std::invalid_argument("r must be between 1 and 7");
  const NodePolynomials nodes = node_polynomials(r);
  ConsistencyReport out;
  out.r = r;

  struct Spec {
    Integer coefficient;
    std::string name;
    NodePolynomial polynomial;
    std::string germ;
    int extra_nodes;
  };
  std::vector<Spec> specs{{factorial(r), "N_" + std::to_string(r), nodes.counts.back(), "", r}};
  if (r >= 4) {
    const auto triple = triple_point_polynomials();
    const std::string d4 = "x*y*(x+y)";
    specs.push_back({r == 4 ? 6 : r == 5 ? 30 : r == 6 ? 180 : 1260, reference::singular_formulas()[r - 4].name,
                     triple[r - 4], d4, r - 4});
    if (r >= 6) {
      const auto level2 = level2_polynomials();
      const std::string d6 = "y*(x - y^2)*(x + y^2)";
      specs.push_back({r == 6 ? 30 : 210, reference::singular_formulas()[r - 2].name, level2[r - 6], d6, r - 6});
      if (r == 7) specs.push_back({30, reference::singular_formulas()[6].name, level2[2], "x^3 + x*y^3", 0});
    }
  }

  for (const auto& s : specs) {
    SequenceTerm t{s.coefficient, s.name, s.polynomial, describe(s.germ, s.extra_nodes),
                   count_node_sequences(with_nodes(s.germ, s.extra_nodes), r)};
    out.total += s.polynomial * Rational(s.coefficient);
    out.terms.push_back(std::move(t));
  }
  out.coefficients_match = true;
  for (const auto& t : out.terms) {
    if (t.coefficient != t.enumerated) {
      out.coefficients_match = false;
      throw MismatchError("sequence coefficient of " + t.name, t.enumerated.get_str(), t.coefficient.get_str(),
                          "enumerated " + t.enumerated.get_str() + " on " + t.witness_germ);
    }
  }
  return out;
}

}  // namespace nodepoly

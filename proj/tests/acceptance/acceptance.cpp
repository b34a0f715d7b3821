// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "nodepoly/diagram.hpp"
#include "nodepoly/engine.hpp"
#include "nodepoly/oracle.hpp"
#include "nodepoly/resolve.hpp"
#include "nodepoly/surfaces.hpp"

using namespace nodepoly;

namespace {

// Collects failure messages for one criterion.
class Failures {
 public:
  void require(bool ok, const std::string& message) {
    if (!ok) messages_.push_back(message);
  }
  bool empty() const { return messages_.empty(); }
  std::string summary() const {
    std::string out = messages_.front();
    if (messages_.size() > 1) out += " (and " + std::to_string(messages_.size() - 1) + " more)";
    return out;
  }

 private:
  std::vector<std::string> messages_;
};

bool run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<void(Failures&)>& body) {
  Failures failures;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(failures);
  } catch (const std::exception& e) {
    failures.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  failures.require(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " +
                                                std::to_string(limit_seconds) + " s");
  const bool ok = failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title << "  [" << std::fixed
            << std::setprecision(2) << seconds << " s]";
  if (!ok) std::cout << "  " << failures.summary();
  std::cout << std::endl;
  return ok;
}

template <class Poly>
Poly random_poly(std::mt19937_64& rng, int max_exponent, int terms) {
  std::uniform_int_distribution<int> exponent(0, max_exponent);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  Poly p;
  for (int t = 0; t < terms; ++t) {
    typename Poly::Exponents e{};
    for (auto& x : e) x = exponent(rng);
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

// Catalog diagrams and their two-component unions with cod <= cod_max.
std::vector<Diagram> catalog_and_unions(int cod_max) {
  const auto catalog = enumerate_one_root(std::min(cod_max, 10));
  std::vector<Diagram> out(catalog.begin(), catalog.end());
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j)
      if (characters(catalog[i]).cod + characters(catalog[j]).cod <= cod_max)
        out.push_back(disjoint_union(catalog[i], catalog[j]));
  return out;
}

std::string name_of(const Diagram& d) { return identify(d).value_or(canonical_form(d)); }

MultiGerm with_nodes(const std::string& germ, int nodes) {
  std::vector<PlacedGerm> placed;
  if (!germ.empty()) placed.push_back({parse_germ(germ), 0, 0});
  for (int i = 1; i <= nodes; ++i) placed.push_back({parse_germ("x*y"), i, 3 * i});
  return multigerm_from_product(placed);
}

}  // namespace

int main() {
  int failed = 0;
  auto tally = [&failed](bool ok) { failed += ok ? 0 : 1; };

  tally(run_criterion(1, "Chern classes [X_2], [X_3], [X_4]", 1, [](Failures& f) {
    for (int i = 2; i <= 4; ++i)
      f.require(chern_xclass(i) == reference::xclass(i), "[X_" + std::to_string(i) + "] = " + chern_xclass(i).to_string());
  }));

  tally(run_criterion(2, "linear forms a_1 .. a_8", 60, [](Failures& f) {
    const NodePolynomials np = node_polynomials(8, Checking::kNone);
    const auto& ref = reference::linear_forms();
    for (std::size_t q = 0; q < 8; ++q)
      f.require(np.linear_forms[q] == ref[q], "a_" + std::to_string(q + 1) + " = " + np.linear_forms[q].to_string());
    f.require(np.linear_forms[7].coefficient({1, 0, 0, 0}) == Rational(Integer("-7118400139200")),
              "coefficient of d in a_8");
    f.require(np.counts[0] == parse_node_polynomial("3d + 2k + x"), "N_1 = " + np.counts[0].to_string());
  }));

  tally(run_criterion(3, "seven singular-point formulas", 60, [](Failures& f) {
    const auto triple = triple_point_polynomials(Checking::kNone);
    const auto level2 = level2_polynomials(Checking::kNone);
    const auto& ref = reference::singular_formulas();
    for (std::size_t i = 0; i < 4; ++i) f.require(triple[i] == ref[i].value, ref[i].name + " = " + triple[i].to_string());
    for (std::size_t i = 0; i < 3; ++i)
      f.require(level2[i] == ref[4 + i].value, ref[4 + i].name + " = " + level2[i].to_string());
    f.require(level2[2] == parse_node_polynomial("252d + 488k + 217s + 42x"), "N(3(2)')");
  }));

  tally(run_criterion(4, "classification of one-root diagrams with cod <= 10", 30, [](Failures& f) {
    struct Row {
      const char* name;
      int cod, deg, dim, r, delta, mu;
    };
    // characters of the 27 diagrams
    const std::vector<Row> table{
        {"A1", 1, 3, 2, 2, 1, 1},      {"A2", 2, 5, 3, 1, 1, 2},      {"A3", 3, 6, 3, 2, 2, 3},
        {"A4", 4, 8, 4, 1, 2, 4},      {"A5", 5, 9, 4, 2, 3, 5},      {"A6", 6, 11, 5, 1, 3, 6},
        {"A7", 7, 12, 5, 2, 4, 7},     {"A8", 8, 14, 6, 1, 4, 8},     {"A9", 9, 15, 6, 2, 5, 9},
        {"A10", 10, 17, 7, 1, 5, 10},  {"D4", 4, 6, 2, 3, 3, 4},      {"D5", 5, 8, 3, 2, 3, 5},
        {"D6", 6, 9, 3, 3, 4, 6},      {"D7", 7, 11, 4, 2, 4, 7},     {"D8", 8, 12, 4, 3, 5, 8},
        {"D9", 9, 14, 5, 2, 5, 9},     {"D10", 10, 15, 5, 3, 6, 10},  {"E6", 6, 9, 3, 1, 3, 6},
        {"E7", 7, 10, 3, 2, 4, 7},     {"E8", 8, 11, 3, 1, 4, 8},     {"X1,0", 8, 10, 2, 4, 6, 9},
        {"J2,0", 9, 12, 3, 3, 6, 10},  {"X1,1", 9, 12, 3, 3, 6, 10},  {"J2,1", 10, 14, 4, 2, 6, 11},
        {"X1,2", 10, 13, 3, 4, 7, 11}, {"Z11", 10, 13, 3, 2, 6, 11},  {"Y1,1", 10, 14, 4, 2, 6, 11}};
    const auto catalog = enumerate_one_root(10);
    f.require(catalog.size() == 27, "enumerated " + std::to_string(catalog.size()) + " diagrams");
    for (const auto& row : table) {
      const Diagram expected = parse_diagram_name(row.name);
      const auto it = std::find_if(catalog.begin(), catalog.end(),
                                   [&](const Diagram& d) { return isomorphic(d, expected); });
      f.require(it != catalog.end(), std::string(row.name) + " not enumerated");
      const CharacterSet c = characters(expected);
      f.require(c.cod == row.cod && c.deg == row.deg && c.dim == row.dim && c.r == row.r &&
                    c.delta == row.delta && c.mu == row.mu,
                std::string("characters of ") + row.name);
    }
    for (const auto& d : catalog_and_unions(10)) {
      const CharacterSet c = characters(d);
      f.require(c.mu - 1 <= c.cod && c.deg <= 3 * c.cod, "inequalities fail on " + name_of(d));
    }
  }));

  tally(run_criterion(5, "reduction subdiagrams with cod >= r and deg <= 3r", 300, [](Failures& f) {
    for (const auto& d : catalog_and_unions(12)) {
      const int cod = characters(d).cod;
      for (int r = 1; r <= 8 && r + 1 <= cod; ++r) {
        const auto w = find_reduction_subdiagram(d, r);
        const std::string label = name_of(d) + " at r = " + std::to_string(r);
        f.require(w.has_value(), "no witness for " + label);
        if (!w) continue;
        const CharacterSet c = characters(*w);
        f.require(validate(*w).ok() && is_subdiagram(*w, d) && c.cod >= r && c.deg <= 3 * r,
                  "bad witness for " + label);
      }
    }
  }));

  tally(run_criterion(6, "normal forms resolve to the named diagrams", 60, [](Failures& f) {
    const std::vector<std::pair<std::string, std::string>> rows{
        {"A1", "y^2 + x^2"},      {"A2", "y^2 + x^3"},      {"A5", "y^2 + x^6"},
        {"D4", "x^2*y + y^3"},    {"D5", "x^2*y + y^4"},    {"D8", "x^2*y + y^7"},
        {"E6", "x^3 + y^4"},      {"E7", "x^3 + x*y^3"},    {"E8", "x^3 + y^5"},
        {"X1,0", "x^4 + y^4"},    {"J2,0", "x^3 + y^6"},    {"X1,1", "x^4 + x^2*y^2 + y^5"},
        {"J2,1", "x^3 + x^2*y^2 + y^7"}, {"X1,2", "x^4 + x^2*y^2 + y^6"},
        {"Z11", "x^3*y + y^5 + x*y^4"},  {"Y1,1", "x^5 + x^2*y^2 + y^5"}};
    for (const auto& [name, text] : rows) {
      const BiPoly g = parse_germ(text);
      const GermReport report = germ_characters(g);
      const CharacterSet expected = characters(parse_diagram_name(name));
      f.require(isomorphic(report.diagram, parse_diagram_name(name)), name + " resolved to " + name_of(report.diagram));
      f.require(report.mu == 2 * report.delta - report.branches + report.sing_points, name + ": Milnor-Jung");
      f.require(report.mu == expected.mu && report.delta == expected.delta && report.branches == expected.r,
                name + ": characters");
      f.require(milnor_oracle(g) == report.mu, name + ": Milnor oracle");
    }
  }));

  tally(run_criterion(7, "node sequence counts", 300, [](Failures& f) {
    const std::vector<std::tuple<std::string, int, int, long>> rows{
        {"x*y*(x+y)", 0, 4, 6},           {"x*y*(x+y)", 1, 5, 30},
        {"x*y*(x+y)", 2, 6, 180},         {"y*(x - y^2)*(x + y^2)", 0, 6, 30},
        {"x*y*(x+y)", 3, 7, 1260},        {"y*(x - y^2)*(x + y^2)", 1, 7, 210},
        {"x^3 + x*y^3", 0, 7, 30}};
    for (const auto& [germ, nodes, r, expected] : rows) {
      const Integer count = count_node_sequences(with_nodes(germ, nodes), r);
      f.require(count == expected, germ + " + " + std::to_string(nodes) + " nodes, r = " + std::to_string(r) +
                                       ": " + count.get_str());
    }
    for (int r = 1; r <= 4; ++r)
      f.require(count_node_sequences(with_nodes("", r), r) == factorial(r), std::to_string(r) + "A1");
  }));

  tally(run_criterion(8, "node polynomials against Caporaso-Harris counts", 120, [](Failures& f) {
    const NodePolynomials np = node_polynomials(3);
    for (int r = 1; r <= 3; ++r)
      for (long m = 4; m <= 6; ++m) {
        const Rational value =
            evaluate(np.counts[static_cast<std::size_t>(r - 1)], chern_numbers(SurfaceSpec::projective_plane(m)));
        const Integer expected = total_nodal_count(static_cast<int>(m), r);
        f.require(value == Rational(expected), "N_" + std::to_string(r) + " at m = " + std::to_string(m) + ": " +
                                                  value.get_str() + " vs " + expected.get_str());
      }
    f.require(evaluate(np.counts[0], chern_numbers(SurfaceSpec::projective_plane(3))) == 12, "N_1 on cubics");
  }));

  tally(run_criterion(9, "property suites, 200 randomized cases each", 300, [](Failures& f) {
    constexpr int kCases = 200;
    std::mt19937_64 rng(1);
    const NodePolynomials np = node_polynomials(8);
    int integrality = 0;
    for (int r = 1; r <= 8; ++r) {
      const NodePolynomial& n = np.counts[static_cast<std::size_t>(r - 1)];
      for (long m = 1; m <= 12; ++m, ++integrality)
        f.require(is_integer(evaluate(n, chern_numbers(SurfaceSpec::projective_plane(m)))),
                  "N_" + std::to_string(r) + " on P2, m = " + std::to_string(m));
      for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b, ++integrality)
          f.require(is_integer(evaluate(n, chern_numbers(SurfaceSpec::quadric(a, b)))),
                    "N_" + std::to_string(r) + " on a quadric");
    }
    f.require(integrality >= kCases, "too few integrality cases");

    std::uniform_int_distribution<int> length(1, 6);
    for (int i = 0; i < kCases; ++i) {
      const int n = length(rng);
      std::vector<NodePolynomial> a;
      for (int q = 0; q < n; ++q) a.push_back(random_poly<NodePolynomial>(rng, 1, 3));
      f.require(log_transform<NodePolynomial>(exp_transform<NodePolynomial>(a, n)) == a, "exp/log round trip");
    }

    const ClassPoly relation = cls::e().pow(3) + cls::w1() * cls::e().pow(2) + cls::w2() * cls::e();
    for (int i = 0; i < kCases; ++i) {
      const ClassPoly p = random_poly<ClassPoly>(rng, 3, 4);
      const ClassPoly q = random_poly<ClassPoly>(rng, 3, 4);
      f.require(reduce_e(p * q) == reduce_e(reduce_e(p) * reduce_e(q)) && reduce_e(p + q) == reduce_e(p) + reduce_e(q) &&
                    reduce_e(relation * p).is_zero(),
                "reduce_e homomorphism");
    }

    const auto catalog = enumerate_one_root(10);
    std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
    for (int i = 0; i < kCases; ++i) {
      const Diagram& a = catalog[pick(rng)];
      const Diagram& b = catalog[pick(rng)];
      f.require(characters(disjoint_union(a, b)) == characters(a) + characters(b), "character additivity");
    }
  }));

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

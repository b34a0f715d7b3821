#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nodepoly/diagram.hpp"
#include "nodepoly/engine.hpp"
#include "nodepoly/oracle.hpp"
#include "nodepoly/resolve.hpp"
#include "nodepoly/surfaces.hpp"

using namespace nodepoly;
using json = nlohmann::ordered_json;

namespace {

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json characters_json(const CharacterSet& c) {
  return {{"cod", c.cod}, {"deg", c.deg}, {"dim", c.dim}, {"r", c.r},
          {"delta", c.delta}, {"mu", c.mu}, {"frs", c.frs}, {"rts", c.rts}};
}

std::string characters_row(const CharacterSet& c) {
  std::ostringstream out;
  for (int v : {c.cod, c.deg, c.dim, c.r, c.delta, c.mu}) out << std::setw(5) << v;
  return out.str();
}

const char* kCharacterHeader = "  cod  deg  dim    r    δ    μ";

std::string display_name(const Diagram& d) { return identify(d).value_or(canonical_form(d)); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int run_classify(int cod_max, bool as_json) {
  const auto catalog = enumerate_one_root(cod_max);
  if (as_json) {
    json out = json::array();
    for (const auto& d : catalog)
      out.push_back({{"name", display_name(d)}, {"characters", characters_json(characters(d))}});
    print(out);
    return 0;
  }
  std::cout << std::left << std::setw(8) << "type" << kCharacterHeader << "\n";
  for (const auto& d : catalog)
    std::cout << std::left << std::setw(8) << display_name(d) << std::right << characters_row(characters(d)) << "\n";
  std::cout << catalog.size() << " diagrams\n";
  return 0;
}

Diagram load_diagram(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_diagram_text(buffer.str());
  }
  return parse_diagram_name(name);
}

int run_characters(const std::string& name, const std::string& file, bool as_json) {
  const Diagram d = load_diagram(name, file);
  const ValidationReport report = validate(d);
  if (!report.well_formed()) {
    std::cerr << report.to_string();
    return 1;
  }
  const CharacterSet c = characters(d);
  if (as_json) {
    print({{"name", display_name(d)},
           {"valid", report.ok()},
           {"violations", report.ok() ? "" : report.to_string()},
           {"characters", characters_json(c)}});
  } else {
    std::cout << display_name(d) << "\n" << kCharacterHeader << "\n" << characters_row(c) << "\n";
    std::cout << "frs " << c.frs << ", rts " << c.rts << "\n";
    if (!report.ok()) std::cout << report.to_string();
  }
  return report.ok() ? 0 : 1;
}

int run_resolve(const std::string& germ_text, bool as_json) {
  const BiPoly germ = parse_germ(germ_text);
  const Resolution res = resolve_germ(germ);
  const GermReport report = germ_characters(germ);
  const int oracle_mu = milnor_oracle(germ);
  if (as_json) {
    json points = json::array();
    for (const auto& p : res.trace.points)
      points.push_back({{"id", p.id},
                        {"parent", p.parent ? json(*p.parent) : json()},
                        {"remote", p.remote ? json(*p.remote) : json()},
                        {"multiplicity", p.multiplicity},
                        {"total_transform_coefficient", p.total_transform_coefficient},
                        {"center", p.center},
                        {"essential", p.essential}});
    print({{"germ", germ.to_string()},
           {"type", display_name(report.diagram)},
           {"diagram", to_text(report.diagram)},
           {"mu", report.mu},
           {"delta", report.delta},
           {"branches", report.branches},
           {"sing_points", report.sing_points},
           {"milnor_oracle", oracle_mu},
           {"trace", points}});
  } else {
    std::cout << "germ " << germ.to_string() << "\n";
    std::cout << "type " << display_name(report.diagram) << "\n";
    std::cout << to_text(report.diagram);
    std::cout << "mu " << report.mu << " (oracle " << oracle_mu << "), delta " << report.delta << ", branches "
              << report.branches << ", singular points " << report.sing_points << "\n";
  }
  return oracle_mu == report.mu ? 0 : 1;
}

int run_node_polys(int r, bool as_json) {
  const NodePolynomials np = node_polynomials(r);
  if (as_json) {
    json out = json::array();
    for (int q = 1; q <= r; ++q)
      out.push_back({{"q", q},
                     {"a", np.linear_forms[static_cast<std::size_t>(q - 1)].to_string()},
                     {"N", np.counts[static_cast<std::size_t>(q - 1)].to_string()}});
    print(out);
    return 0;
  }
  for (int q = 1; q <= r; ++q)
    std::cout << "a_" << q << " = " << np.linear_forms[static_cast<std::size_t>(q - 1)].to_string() << "\n";
  for (int q = 1; q <= r; ++q)
    std::cout << "N_" << q << " = " << np.counts[static_cast<std::size_t>(q - 1)].to_string() << "\n";
  return 0;
}

std::vector<std::pair<std::string, NodePolynomial>> singular_polynomials() {
  const auto triple = triple_point_polynomials();
  const auto level2 = level2_polynomials();
  const auto& names = reference::singular_formulas();
  std::vector<std::pair<std::string, NodePolynomial>> out;
  for (std::size_t i = 0; i < 4; ++i) out.emplace_back(names[i].name, triple[i]);
  for (std::size_t i = 0; i < 3; ++i) out.emplace_back(names[4 + i].name, level2[i]);
  return out;
}

int run_triple_polys(bool as_json) {
  const auto polys = singular_polynomials();
  if (as_json) {
    json out = json::object();
    for (const auto& [name, p] : polys) out[name] = p.to_string();
    print(out);
    return 0;
  }
  for (const auto& [name, p] : polys) std::cout << name << " = " << p.to_string() << "\n";
  return 0;
}

int run_evaluate(const std::string& surface_text, int r, bool as_json) {
  const SurfaceSpec spec = parse_surface(surface_text);
  const ChernNumbers c = chern_numbers(spec);
  const NodePolynomials np = node_polynomials(r);
  const Rational value = evaluate(np.counts.back(), c);
  const AmplenessReport flag = ampleness_threshold(r, ampleness_twist(spec));
  if (as_json) {
    print({{"surface", spec.to_string()},
           {"chern", {{"d", integer_json(c.d)}, {"k", integer_json(c.k)}, {"s", integer_json(c.s)}, {"x", integer_json(c.x)}}},
           {"r", r},
           {"N", value.get_str()},
           {"m", flag.m ? json(*flag.m) : json()},
           {"within_regime", flag.within_regime}});
    return 0;
  }
  std::cout << spec.to_string() << ": (d, k, s, x) = (" << c.d << ", " << c.k << ", " << c.s << ", " << c.x << ")\n";
  std::cout << "N_" << r << " = " << value.get_str() << "\n";
  std::cout << flag.to_string() << "\n";
  return 0;
}

int run_sequences(const std::string& germ_text, int nodes, int r, int consistency, bool as_json) {
  if (consistency > 0) {
    const ConsistencyReport report = consistency_report(consistency);
    if (as_json) {
      json terms = json::array();
      for (const auto& t : report.terms)
        terms.push_back({{"name", t.name},
                         {"coefficient", integer_json(t.coefficient)},
                         {"enumerated", integer_json(t.enumerated)},
                         {"witness", t.witness_germ},
                         {"polynomial", t.polynomial.to_string()}});
      print({{"r", report.r}, {"terms", terms}, {"total", report.total.to_string()}});
    } else {
      std::cout << report.to_string();
    }
    return 0;
  }
  if (r < 1) throw CLI::ValidationError("--r", "sequences needs --r (or --consistency)");
  std::vector<PlacedGerm> placed;
  if (!germ_text.empty()) placed.push_back({parse_germ(germ_text), 0, 0});
  for (int i = 1; i <= nodes; ++i) placed.push_back({parse_germ("x*y"), i, 3 * i});
  if (placed.empty()) throw CLI::ValidationError("--germ", "give a germ or --nodes");
  const Integer count = count_node_sequences(multigerm_from_product(placed), r);
  if (as_json)
    print({{"germ", germ_text}, {"nodes", nodes}, {"r", r}, {"count", integer_json(count)}});
  else
    std::cout << count << "\n";
  return 0;
}

int run_oracle(int m_max, int delta_max, bool as_json, bool as_csv) {
  CHOracle& oracle = default_oracle();
  std::filesystem::path cache;
  if (const char* dir = std::getenv("NODEPOLY_CACHE_DIR")) {
    cache = std::filesystem::path(dir) / "ch_memo.txt";
    oracle.load(cache);
  }
  json rows = json::array();
  if (as_csv) std::cout << "m,delta,severi,irreducible,total\n";
  else if (!as_json) std::cout << "   m  delta  severi  irreducible  total\n";
  for (int m = 1; m <= m_max; ++m)
    for (int delta = 0; delta <= delta_max; ++delta) {
      const Integer severi = oracle.severi_degree(m, delta);
      const Integer irreducible = oracle.irreducible(m, delta);
      const std::optional<Integer> total =
          delta <= 3 ? std::optional<Integer>(oracle.total_nodal_count(m, delta)) : std::nullopt;
      if (as_json) {
        rows.push_back({{"m", m},
                        {"delta", delta},
                        {"severi", integer_json(severi)},
                        {"irreducible", integer_json(irreducible)},
                        {"total", total ? integer_json(*total) : json()}});
      } else if (as_csv) {
        std::cout << m << ',' << delta << ',' << severi << ',' << irreducible << ',' << (total ? total->get_str() : "")
                  << "\n";
      } else {
        std::cout << std::setw(4) << m << std::setw(7) << delta << std::setw(8) << severi << std::setw(13)
                  << irreducible << std::setw(7) << (total ? total->get_str() : "-") << "\n";
      }
    }
  if (as_json) print(rows);
  if (!cache.empty()) oracle.save(cache);
  return 0;
}

// ---------------------------------------------------------------------------

struct Check {
  std::string label;
  bool ok;
  std::string detail;
};

int run_verify(bool as_json) {
  std::vector<Check> checks;
  auto attempt = [&checks](const std::string& label, const std::function<std::string()>& body) {
    try {
      const std::string detail = body();
      checks.push_back({label, detail.empty(), detail});
    } catch (const std::exception& e) {
      checks.push_back({label, false, e.what()});
    }
  };

  attempt("[X_2], [X_3], [X_4]", [] {
    for (int i = 2; i <= 4; ++i) expect_equal("[X_" + std::to_string(i) + "]", chern_xclass(i), reference::xclass(i));
    return std::string();
  });
  attempt("a_1 .. a_8", [] {
    node_polynomials(8);
    return std::string();
  });
  attempt("N_1 = 3d + 2k + x", [] {
    const NodePolynomial n1 = node_polynomials(1).counts[0];
    return n1 == parse_node_polynomial("3d + 2k + x") ? std::string() : "N_1 = " + n1.to_string();
  });
  attempt("seven singular-point formulas", [] {
    triple_point_polynomials();
    level2_polynomials();
    return std::string();
  });
  attempt("27 one-root diagrams with cod <= 10", [] {
    const auto catalog = enumerate_one_root(10);
    std::string detail = catalog.size() == 27 ? "" : "found " + std::to_string(catalog.size()) + " diagrams";
    for (const auto& d : catalog)
      if (!validate(d).ok() || !identify(d)) detail += " unnamed or invalid: " + canonical_form(d);
    return detail;
  });
  attempt("normal forms resolve with matching Milnor numbers", [] {
    const std::vector<std::pair<std::string, std::string>> rows{
        {"A1", "x*y"},         {"A4", "y^2 + x^5"},          {"D5", "x^2*y + y^4"},
        {"E6", "x^3 + y^4"},   {"E7", "x^3 + x*y^3"},        {"E8", "x^3 + y^5"},
        {"X1,0", "x^4 + y^4"}, {"J2,0", "x^3 + y^6"},        {"X1,1", "x^4 + x^2*y^2 + y^5"},
        {"J2,1", "x^3 + x^2*y^2 + y^7"}, {"X1,2", "x^4 + x^2*y^2 + y^6"}, {"Z11", "x^3*y + y^5 + x*y^4"},
        {"Y1,1", "x^5 + x^2*y^2 + y^5"}};
    std::string detail;
    for (const auto& [name, text] : rows) {
      const BiPoly g = parse_germ(text);
      const GermReport report = germ_characters(g);
      if (!isomorphic(report.diagram, parse_diagram_name(name))) detail += name + ": got " + display_name(report.diagram) + "; ";
      if (milnor_oracle(g) != report.mu) detail += name + ": Milnor oracle differs; ";
    }
    return detail;
  });
  attempt("node sequence coefficients", [] {
    for (int r = 1; r <= 7; ++r) consistency_report(r);
    return std::string();
  });
  attempt("plane counts against Caporaso-Harris", [] {
    const NodePolynomials np = node_polynomials(3);
    std::string detail;
    for (int r = 1; r <= 3; ++r)
      for (long m = 4; m <= 6; ++m) {
        const Rational value = evaluate(np.counts[static_cast<std::size_t>(r - 1)], chern_numbers(SurfaceSpec::projective_plane(m)));
        const Integer expected = total_nodal_count(static_cast<int>(m), r);
        if (value != Rational(expected))
          detail += "N_" + std::to_string(r) + " at m=" + std::to_string(m) + ": " + value.get_str() + " vs " +
                    expected.get_str() + "; ";
      }
    if (evaluate(np.counts[0], chern_numbers(SurfaceSpec::projective_plane(3))) != 12) detail += "N_1 on cubics; ";
    return detail;
  });

  bool all_ok = true;
  json out = json::array();
  for (const auto& c : checks) {
    all_ok = all_ok && c.ok;
    if (as_json)
      out.push_back({{"check", c.label}, {"ok", c.ok}, {"detail", c.detail}});
    else
      std::cout << (c.ok ? "ok    " : "FAIL  ") << c.label << (c.ok ? "" : "\n      " + c.detail) << "\n";
  }
  if (as_json) print(out);
  else std::cout << (all_ok ? "all checks matched\n" : "verification failed\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Node polynomials, Enriques diagrams and plane-curve germs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  int cod_max = 10;
  auto* classify = app.add_subcommand("classify", "list the one-root diagrams up to a codimension");
  classify->add_option("--cod-max", cod_max, "largest codimension (1..10)")->check(CLI::Range(1, 10));

  std::string name;
  std::string file;
  auto* chars = app.add_subcommand("characters", "characters of a diagram given by name or text file");
  auto* name_opt = chars->add_option("--name", name, "diagram name such as D4+2A1");
  auto* file_opt = chars->add_option("--file", file, "diagram text file")->check(CLI::ExistingFile);
  name_opt->excludes(file_opt);
  chars->require_option(1);

  std::string germ;
  auto* resolve = app.add_subcommand("resolve", "resolve a plane-curve germ at the origin");
  resolve->add_option("--germ", germ, "polynomial in x, y")->required();

  int r = 0;
  auto* node_polys = app.add_subcommand("node-polys", "linear forms a_q and node polynomials N_q");
  node_polys->add_option("--r", r, "largest q (1..8)")->required()->check(CLI::Range(1, 8));

  auto* triple_polys = app.add_subcommand("triple-polys", "the seven singular-point formulas");

  std::string surface;
  auto* eval = app.add_subcommand("evaluate", "evaluate N_r on a surface");
  eval->add_option("--surface", surface, "p2:m, quadric:a,b or raw:d,k,s,x")->required();
  eval->add_option("--r", r, "number of nodes (1..8)")->required()->check(CLI::Range(1, 8));

  auto* verify = app.add_subcommand("verify", "check every reproduced formula and table");

  int nodes = 0;
  int consistency = 0;
  auto* sequences = app.add_subcommand("sequences", "count node sequences on a germ");
  sequences->add_option("--germ", germ, "polynomial in x, y");
  sequences->add_option("--nodes", nodes, "additional separate nodes")->check(CLI::Range(0, 7));
  sequences->add_option("--r", r, "sequence length (1..7)")->check(CLI::Range(1, 7));
  sequences->add_option("--consistency", consistency, "assemble N(2^[r]) for this r instead")->check(CLI::Range(1, 7));

  int m_max = 6;
  int delta_max = 3;
  bool as_csv = false;
  auto* oracle = app.add_subcommand("oracle", "Caporaso-Harris plane curve counts");
  oracle->add_option("--m-max", m_max, "largest degree")->check(CLI::Range(1, 12));
  oracle->add_option("--delta-max", delta_max, "largest node count")->check(CLI::Range(0, 12));
  oracle->add_flag("--csv", as_csv, "comma-separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*classify) return run_classify(cod_max, as_json);
    if (*chars) return run_characters(name, file, as_json);
    if (*resolve) return run_resolve(germ, as_json);
    if (*node_polys) return run_node_polys(r, as_json);
    if (*triple_polys) return run_triple_polys(as_json);
    if (*eval) return run_evaluate(surface, r, as_json);
    if (*verify) return run_verify(as_json);
    if (*sequences) return run_sequences(germ, nodes, r, consistency, as_json);
    if (*oracle) return run_oracle(m_max, delta_max, as_json, as_csv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

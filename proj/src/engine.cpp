#include "nodepoly/engine.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace nodepoly {

MismatchError::MismatchError(const std::string& label, const std::string& computed, const std::string& expected,
                             const std::string& difference)
    : std::runtime_error(label + " mismatch\n  computed: " + computed + "\n  expected: " + expected +
                         "\n  computed - expected: " + difference),
      label_(label),
      difference_(difference) {}

void expect_equal(const std::string& label, const NodePolynomial& computed, const NodePolynomial& expected) {
  if (computed != expected)
    throw MismatchError(label, computed.to_string(), expected.to_string(), (computed - expected).to_string());
}

void expect_equal(const std::string& label, const ClassPoly& computed, const ClassPoly& expected) {
  if (computed != expected)
    throw MismatchError(label, computed.to_string(), expected.to_string(), (computed - expected).to_string());
}

namespace reference {

const std::vector<NodePolynomial>& linear_forms() {
  static const std::vector<NodePolynomial> forms = [] {
    std::vector<NodePolynomial> out;
    for (const char* text : {
             "3d+2k+x",
             "-42d-39k-6s-7x",
             "1380d+1576k+376s+138x",
             "-72360d-95670k-28842s-3888x",
             "5225472d+7725168k+2723400s+84384x",
             "-481239360d-778065120k-308078520s+7918560x",
             "53917151040d+93895251840k+40747613760s-2465471520x",
             "-7118400139200d-13206119880240k-6179605765200s+516524964480x",
         })
      out.push_back(parse_node_polynomial(text));
    return out;
  }();
  return forms;
}

const ClassPoly& xclass(int i) {
  static const std::array<ClassPoly, 3> classes = {
      parse_class_poly("v^3+w1*v^2+v*w2"),
      parse_class_poly("v^6+4w1*v^5+(5w1^2+5w2)*v^4+(2w1^3+11w1*w2)*v^3+(6w2*w1^2+4w2^2)*v^2+4v*w1*w2^2"),
      parse_class_poly(
          "v^10+10w1*v^9+(15w2+40w1^2)*v^8+(82w1^3+111w1*w2)*v^7"
          "+(91w1^4+315w2*w1^2+63w2^2)*v^6+(52w1^5+429w2*w1^3+324w1*w2^2)*v^5"
          "+(12w1^6+282w2*w1^4+593w2^2*w1^2+85w2^3)*v^4+(72w2*w1^5+464w2^2*w1^3+259w1*w2^3)*v^3"
          "+(132w2^2*w1^4+246w2^3*w1^2+36w2^4)*v^2+(72w2^3*w1^3+36w1*w2^4)*v"),
  };
  if (i < 2 || i > 4) throw std::invalid_argument("reference::xclass: i must be 2, 3 or 4");
  return classes[static_cast<std::size_t>(i - 2)];
}

const std::vector<NamedFormula>& singular_formulas() {
  static const std::vector<NamedFormula> formulas = [] {
    std::vector<NamedFormula> out;
    auto add = [&out](const char* name, const char* text) { out.push_back({name, parse_node_polynomial(text)}); };
    add("N(3)", "15d+20k+5s+5x");
    add("N(3,2)",
        "45d^2+(15s+90k+30x-420)*d+40k^2+(10s+30x-624)*k"
        "+(5x-196)*s+5x^2-100x");
    add("N(3,2,2)",
        "(135d^3+(135x+45s+360k-3150)*d^2+(300k^2+(60s+240x-6849)*k"
        "+(-1476+30x)*s+45x^2-1755x+18480)*d+80k^3+(100x-3276+20s)*k^2"
        "+((-1099+20x)*s+40x^2-1983x+29946)*k-30s^2+(10932-457x+5x^2)*s"
        "+5x^3-235x^2+3120x)/2");
    add("N(3,2,2,2)",
        "(405d^4+(-17010+1350k+135s+540x)*d^3+(1620k^2+(270s+1350x-48573)*k"
        "+(135x-7992)*s+270x^2-14985x+239940)*d^2+(840k^3+(180s+1080x-43074)*k^2"
        "+((-11691+180x)*s+450x^2-29052x+559398)*k-270s^2+(-5013x+143184+45x^2)*s"
        "+60x^3-4320x^2+113910x-1135080)*d+160k^4+(40s+280x-12168)*k^3"
        "+((-4242+60x)*s+180x^2-13038x+284204)*k^2+(-180s^2+(115156+30x^2-3687x)*s"
        "+50x^3-4287x^2+144002x-1977552)*k+(-90x+5408)*s^2+(5x^3-783x^2+41282x-807006)*s"
        "+5x^4-405x^3+12150x^2-128700x)/6");
    add("N(3(2))", "28x+168s+224d+406k");
    add("N(3(2),2)",
        "-546x-7281s-8316d-16008k+28x^2+462x*k+308x*d"
        "+168s*x+336s*k+504s*d+812k^2+1666k*d+672d^2");
    add("N(3(2)')", "252d+488k+217s+42x");
    return out;
  }();
  return formulas;
}

}  // namespace reference

std::vector<ClassPoly> b_sequence(int r_max) {
  if (r_max < 1 || r_max > 8) throw std::invalid_argument("b_sequence: r_max must be in 1..8");
  const ClassPoly x2 = chern_xclass(2);
  const ClassPoly x3 = chern_xclass(3);
  const ClassPoly x4 = chern_xclass(4);

  std::vector<ClassPoly> b{x2};
  // qx images of the b's, filled lazily as b grows
  std::array<std::vector<ClassPoly>, 3> images;
  auto images_up_to = [&](int i, int count) -> std::span<const ClassPoly> {
    auto& img = images[static_cast<std::size_t>(i - 2)];
    while (static_cast<int>(img.size()) < count) img.push_back(qx(i, b[img.size()]));
    return {img.data(), static_cast<std::size_t>(count)};
  };

  for (int q = 1; q < r_max; ++q) {
    ClassPoly next = exp_polynomial<ClassPoly>(images_up_to(2, q), q) * x2;
    if (q >= 3) {
      const Rational c(factorial(3) * binomial(q, 3));
      next -= exp_polynomial<ClassPoly>(images_up_to(3, q - 3), q - 3) * x3 * c;
    }
    if (q >= 7) {
      const Rational c(Integer(3281) * factorial(7) * binomial(q, 7));
      next += exp_polynomial<ClassPoly>(images_up_to(4, q - 7), q - 7) * x4 * c;
    }
    b.push_back(std::move(next));
  }
  return b;
}

NodePolynomials node_polynomials(int r_max, Checking check) {
  if (r_max < 1 || r_max > 8) throw std::invalid_argument("node_polynomials: r_max must be in 1..8");
  NodePolynomials out;
  const auto b = b_sequence(r_max);
  for (int q = 1; q <= r_max; ++q) {
    NodePolynomial a = pushforward_to_surface(b[static_cast<std::size_t>(q - 1)]);
    if (check == Checking::kAgainstReference)
      expect_equal("a_" + std::to_string(q), a, reference::linear_forms()[static_cast<std::size_t>(q - 1)]);
    out.linear_forms.push_back(std::move(a));
  }
  const auto p = exp_transform<NodePolynomial>(out.linear_forms, r_max);
  for (int r = 1; r <= r_max; ++r)
    out.counts.push_back(p[static_cast<std::size_t>(r)] / Rational(factorial(static_cast<unsigned long>(r))));
  return out;
}

namespace {

// Classes on the iterated families F/Y, F_2/X_2, (F_2)_2/(X_2)_2, ...
// Slot 0 holds numbers in d, k, s, x (classes on Y with the hyperplane power
// dropped); slot L >= 1 holds the v, w1, w2 of the base X_2 of the level-L
// family; the last slot is the fibre of the family currently being pushed.
struct TowerVars {
  static constexpr std::array<std::string_view, 13> kNames{"d",   "k",   "s",   "x",  "v1", "w11", "w21",
                                                           "v2",  "w12", "w22", "vf", "w1f", "w2f"};
  static constexpr std::array<int, 13> kWeights{1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2};
};
using TowerPoly = Polynomial<TowerVars>;

constexpr int kMaxLevel = 2;
constexpr std::size_t kFibreSlot = 3;

std::size_t slot_offset(std::size_t slot) { return slot == 0 ? 0 : 4 + 3 * (slot - 1); }

TowerPoly embed(const ClassPoly& p, std::size_t slot) {
  TowerPoly out;
  const std::size_t off = slot_offset(slot);
  for (const auto& [e, c] : p.terms()) {
    TowerPoly::Exponents t{};
    t[off] = e[cls::kV];
    t[off + 1] = e[cls::kW1];
    t[off + 2] = e[cls::kW2];
    out.add_term(t, c);
  }
  return out;
}

TowerPoly embed(const NodePolynomial& p) {
  TowerPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(TowerPoly::Exponents{e[0], e[1], e[2], e[3]}, c);
  return out;
}

NodePolynomial to_node(const TowerPoly& p) {
  NodePolynomial out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 4; i < e.size(); ++i)
      if (e[i] != 0) throw std::logic_error("tower class did not push down to the surface");
    out.add_term(NodePolynomial::Exponents{e[0], e[1], e[2], e[3]}, c);
  }
  return out;
}

class Tower {
 public:
  // Pushforward of a fibre class from the level-L family to its base.
  // Level 0 is the product family over Y; level L is the blown-up family
  // F_2/X_2 built over level L-1, whose pushforward is
  //   pi^* pi_*(f) + Qx_2(f) restricted to the diagonal.
  const TowerPoly& push(int level, const ClassPoly::Exponents& mono) {
    const auto key = std::tuple{level, mono};
    if (auto it = push_cache_.find(key); it != push_cache_.end()) return it->second;
    TowerPoly result;
    if (level == 0) {
      result = embed(pushforward_monomial(mono[0], mono[1], mono[2]));
    } else {
      result = push(level - 1, mono);
      result += embed(qx(2, ClassPoly::monomial(mono, Rational(1))), static_cast<std::size_t>(level));
    }
    return push_cache_.emplace(key, std::move(result)).first->second;
  }

  TowerPoly push(int level, const ClassPoly& f) {
    TowerPoly out;
    for (const auto& [e, c] : f.terms()) out += push(level, e) * c;
    return out;
  }

  // Class on X_i of the level-L family -> base of that family:
  // multiply the fibre part by [X_i] and push.
  TowerPoly push_from_x(int level, int i, const TowerPoly& g) {
    const std::size_t off = slot_offset(kFibreSlot);
    TowerPoly out;
    for (const auto& [e, c] : g.terms()) {
      TowerPoly::Exponents base = e;
      ClassPoly::Exponents fibre{e[off], e[off + 1], e[off + 2], 0};
      base[off] = base[off + 1] = base[off + 2] = 0;
      out += TowerPoly::monomial(base, c) * pushed_xclass_multiple(level, i, fibre);
    }
    return out;
  }

  // Base class a^{(i)}_q of the family F_i/X_i over the level-L family:
  // pullback of the level-L pushforward plus the Qx_i correction on X_i.
  TowerPoly lift(int level, int i, const ClassPoly& f) {
    return push(level, f) + embed(qx(i, f), kFibreSlot);
  }

  // Moves the level-(L+1) base slot into the fibre slot, so a class on the
  // base X_2 of the level-(L+1) family can be pushed from X_2 at level L.
  static TowerPoly base_to_fibre(int next_level, const TowerPoly& g) {
    const std::size_t from = slot_offset(static_cast<std::size_t>(next_level));
    const std::size_t to = slot_offset(kFibreSlot);
    TowerPoly out;
    for (const auto& [key, c] : g.terms()) {
      TowerPoly::Exponents e = key;
      for (std::size_t j = 0; j < 3; ++j) {
        if (e[to + j] != 0) throw std::logic_error("fibre slot already occupied");
        e[to + j] = e[from + j];
        e[from + j] = 0;
      }
      out.add_term(e, c);
    }
    return out;
  }

 private:
  const TowerPoly& pushed_xclass_multiple(int level, int i, const ClassPoly::Exponents& fibre) {
    const auto key = std::tuple{level, i, fibre};
    if (auto it = x_cache_.find(key); it != x_cache_.end()) return it->second;
    TowerPoly value = push(level, ClassPoly::monomial(fibre, Rational(1)) * chern_xclass(i));
    return x_cache_.emplace(key, std::move(value)).first->second;
  }

  std::map<std::tuple<int, ClassPoly::Exponents>, TowerPoly> push_cache_;
  std::map<std::tuple<int, int, ClassPoly::Exponents>, TowerPoly> x_cache_;
};

class SingularClassCalculator {
 public:
  SingularClassCalculator() : b_(b_sequence(4)) {}

  // [U(D4 + j A1)] for the level-L family: the j-nodal class of the family
  // F_3/X_3, P_j(a^{(3)})/j!, pushed down from X_3.
  TowerPoly triple_point(int level, int j) {
    const auto key = std::pair{level, j};
    if (auto it = tp_cache_.find(key); it != tp_cache_.end()) return it->second;
    std::vector<TowerPoly> lifted;
    for (int q = 0; q < j; ++q) lifted.push_back(tower_.lift(level, 3, b_[static_cast<std::size_t>(q)]));
    TowerPoly p = exp_polynomial<TowerPoly>(lifted, j);
    TowerPoly value = tower_.push_from_x(level, 3, p) / Rational(factorial(static_cast<unsigned long>(j)));
    return tp_cache_.emplace(key, std::move(value)).first->second;
  }

  // pi_* of a class living on X_2 of the level-L family, given as a class of
  // the level-(L+1) base.
  TowerPoly push_from_x2(int level, const TowerPoly& g) {
    return tower_.push_from_x(level, 2, Tower::base_to_fibre(level + 1, g));
  }

  // [U(D6)] = pi_*[U_2(D4 + A1)] - 2 [U(D4 + 2A1)]
  TowerPoly d6(int level) {
    if (level + 1 > kMaxLevel) throw std::logic_error("tower depth exceeded");
    return push_from_x2(level, triple_point(level + 1, 1)) - triple_point(level, 2) * Rational(2);
  }

  // [U(D6 + A1)] = pi_*[U_2(D4 + 2A1)] - 3 [U(D4 + 3A1)]
  TowerPoly d6_plus_node(int level) {
    return push_from_x2(level, triple_point(level + 1, 2)) - triple_point(level, 3) * Rational(3);
  }

  // [U(E7)] = pi_*[U_2(D6)] - [U(D6 + A1)]
  TowerPoly e7(int level) { return push_from_x2(level, d6(level + 1)) - d6_plus_node(level); }

 private:
  std::vector<ClassPoly> b_;
  Tower tower_;
  std::map<std::pair<int, int>, TowerPoly> tp_cache_;
};

void check_against(Checking check, std::size_t index, const NodePolynomial& computed) {
  if (check != Checking::kAgainstReference) return;
  const auto& ref = reference::singular_formulas()[index];
  expect_equal(ref.name, computed, ref.value);
}

}  // namespace

std::array<NodePolynomial, 4> triple_point_polynomials(Checking check) {
  SingularClassCalculator calc;
  std::array<NodePolynomial, 4> out;
  for (int j = 0; j < 4; ++j) {
    out[static_cast<std::size_t>(j)] = to_node(calc.triple_point(0, j));
    check_against(check, static_cast<std::size_t>(j), out[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::array<NodePolynomial, 3> level2_polynomials(Checking check) {
  SingularClassCalculator calc;
  std::array<NodePolynomial, 3> out{to_node(calc.d6(0)), to_node(calc.d6_plus_node(0)), to_node(calc.e7(0))};
  for (std::size_t i = 0; i < 3; ++i) check_against(check, 4 + i, out[i]);
  return out;
}

}  // namespace nodepoly

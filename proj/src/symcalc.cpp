#include "nodepoly/symcalc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace nodepoly {

namespace {

// Internal ring for the splitting construction: v and the two Chern roots.
struct RootVars {
  static constexpr std::array<std::string_view, 3> kNames{"v", "alpha", "beta"};
  static constexpr std::array<int, 3> kWeights{1, 1, 1};
};
using RootPoly = Polynomial<RootVars>;

void require_no_e(const ClassPoly& p, const char* who) {
  if (p.max_exponent(cls::kE) > 0)
    throw std::invalid_argument(std::string(who) + ": input must not involve e");
}

// Rewrites a polynomial symmetric in alpha, beta in terms of
// w1 = alpha + beta and w2 = alpha * beta.
ClassPoly symmetrize(RootPoly p) {
  for (const auto& [exps, c] : p.terms()) {
    const RootPoly::Exponents swapped{exps[0], exps[2], exps[1]};
    if (p.coefficient(swapped) != c)
      throw std::logic_error("chern_xclass: intermediate product is not symmetric in the Chern roots");
  }
  const RootPoly w1 = RootPoly::variable(1) + RootPoly::variable(2);
  const RootPoly w2 = RootPoly::variable(1) * RootPoly::variable(2);
  ClassPoly out;
  while (!p.is_zero()) {
    // Term with the largest alpha exponent; symmetry forces beta <= alpha.
    auto lead = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (it->first[1] > lead->first[1]) lead = it;
    const auto [a, i, j] = std::tuple{lead->first[0], lead->first[1], lead->first[2]};
    const Rational c = lead->second;
    if (j > i) throw std::logic_error("chern_xclass: symmetrization failed");
    out.add_term(ClassPoly::Exponents{a, i - j, j, 0}, c);
    p -= RootPoly::variable(0, a) * w1.pow(static_cast<unsigned>(i - j)) * w2.pow(static_cast<unsigned>(j)) * c;
  }
  return out;
}

}  // namespace

ClassPoly reduce_e(const ClassPoly& p) {
  // e^3 = -w1 e^2 - w2 e
  ClassPoly current = p;
  for (;;) {
    bool changed = false;
    ClassPoly next;
    for (const auto& [exps, c] : current.terms()) {
      if (exps[cls::kE] < 3) {
        next.add_term(exps, c);
        continue;
      }
      changed = true;
      auto base = exps;
      base[cls::kE] -= 3;
      auto t1 = base;
      t1[cls::kW1] += 1;
      t1[cls::kE] += 2;
      auto t2 = base;
      t2[cls::kW2] += 1;
      t2[cls::kE] += 1;
      next.add_term(t1, -c);
      next.add_term(t2, -c);
    }
    if (!changed) return next;
    current = std::move(next);
  }
}

ClassPoly chern_xclass(int i) {
  if (i < 2 || i > 4) throw std::invalid_argument("chern_xclass: i must be 2, 3 or 4");
  // The graded pieces Sym^j(Omega)(D), j < i, have Chern roots v + a alpha + b beta, a + b = j.
  RootPoly total(1);
  const RootPoly v = RootPoly::variable(0);
  const RootPoly alpha = RootPoly::variable(1);
  const RootPoly beta = RootPoly::variable(2);
  for (int j = 0; j < i; ++j)
    for (int a = 0; a <= j; ++a) total = total * (v + alpha * Rational(a) + beta * Rational(j - a));
  return symmetrize(std::move(total));
}

namespace {

using QxKey = std::tuple<int, int, int, int>;

const ClassPoly& qx_monomial_cached(int i, int a, int b, int c) {
  static std::mutex mutex;
  static std::map<QxKey, ClassPoly> cache;
  const QxKey key{i, a, b, c};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const ClassPoly expanded = (cls::v() - cls::e() * Rational(i)).pow(static_cast<unsigned>(a)) *
                             (cls::w1() + cls::e()).pow(static_cast<unsigned>(b)) *
                             (cls::w2() - cls::e().pow(2)).pow(static_cast<unsigned>(c));
  const ClassPoly reduced = reduce_e(expanded);
  ClassPoly result;
  for (const auto& [exps, coef] : reduced.terms()) {
    if (exps[cls::kE] != 2) continue;
    auto e = exps;
    e[cls::kE] = 0;
    result.add_term(e, -coef);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

ClassPoly qx(int i, const ClassPoly& p) {
  if (i < 2 || i > 4) throw std::invalid_argument("qx: i must be 2, 3 or 4");
  require_no_e(p, "qx");
  ClassPoly out;
  for (const auto& [exps, c] : p.terms()) out += qx_monomial_cached(i, exps[0], exps[1], exps[2]) * c;
  return out;
}

NodePolynomial pushforward_monomial(int a, int b, int c) {
  using E = NodePolynomial::Exponents;
  if (b == 0 && c == 0) return NodePolynomial::monomial(E{1, 0, 0, 0}, Rational(binomial(a, 2)));
  if (b == 1 && c == 0) return NodePolynomial::monomial(E{0, 1, 0, 0}, Rational(a));
  if (b == 2 && c == 0) return NodePolynomial::monomial(E{0, 0, 1, 0}, Rational(1));
  if (b == 0 && c == 1) return NodePolynomial::monomial(E{0, 0, 0, 1}, Rational(1));
  return {};
}

NodePolynomial pushforward_to_surface(const ClassPoly& p) {
  require_no_e(p, "pushforward_to_surface");
  if (!p.is_homogeneous()) throw std::invalid_argument("pushforward_to_surface: input is not homogeneous");
  NodePolynomial out;
  for (const auto& [exps, c] : p.terms()) out += pushforward_monomial(exps[0], exps[1], exps[2]) * c;
  return out;
}

}  // namespace nodepoly

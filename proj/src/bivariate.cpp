#include "nodepoly/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodepoly {

namespace upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational evaluate(const UPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) { return add(a, scale(b, Rational(-1))); }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

UPoly scale(const UPoly& a, const Rational& c) {
  if (c == 0) return {};
  UPoly out = a;
  for (auto& x : out) x *= c;
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("univariate division by zero");
  UPoly r = a;
  trim(r);
  if (degree(r) < degree(b)) return {UPoly{}, r};
  UPoly q(static_cast<std::size_t>(degree(r) - degree(b) + 1));
  while (degree(r) >= degree(b)) {
    const std::size_t shift = static_cast<std::size_t>(degree(r) - degree(b));
    const Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

UPoly monic(const UPoly& p) {
  if (p.empty()) return p;
  return scale(p, 1 / p.back());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = monic(p);
  if (degree(f) <= 0) return out;
  UPoly fp = derivative(f);
  UPoly a = gcd(f, fp);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(fp, a).first;
  UPoly d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    UPoly g = gcd(b, d);
    if (degree(g) > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = sub(c, derivative(b));
  }
  return out;
}

namespace {

// Sign changes of a Sturm sequence at t.
int sign_changes(const std::vector<UPoly>& sturm, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& s : sturm) {
    const int sign = sgn(evaluate(s, t));
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  UPoly f = p;
  trim(f);
  if (f.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  if (degree(f) == 0) return roots;
  // squarefree part, scaled to coprime integer coefficients
  UPoly sf = divmod(f, gcd(f, derivative(f))).first;
  Integer den = 1;
  for (const auto& c : sf) den = lcm(den, Integer(c.get_den()));
  for (auto& c : sf) c *= den;
  const Integer lead = abs(Integer(sf.back()));
  // every rational root is k / lead for an integer k
  std::vector<UPoly> sturm{sf, derivative(sf)};
  while (degree(sturm.back()) > 0) {
    UPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.empty()) break;
    sturm.push_back(scale(r, Rational(-1)));
  }
  Rational bound = 0;
  for (const auto& c : sf) bound = std::max(bound, Rational(abs(c) / abs(sf.back())));
  bound += 1;
  const Rational width_goal(1, lead);
  // isolate roots in half-open intervals (lo, hi]
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int count = sign_changes(sturm, lo) - sign_changes(sturm, hi);
    if (count == 0) continue;
    if (count == 1 && hi - lo < width_goal) {
      Integer k;
      const Rational scaled = hi * lead;
      mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      Rational candidate(k, lead);
      candidate.canonicalize();
      if (candidate > lo && evaluate(sf, candidate) == 0) roots.push_back(candidate);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace upoly

BiPoly translate(const BiPoly& f, const Rational& a, const Rational& b) {
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    // (x + a)^i (y + b)^j
    for (int s = 0; s <= e[0]; ++s) {
      const Rational cx = Rational(binomial(e[0], s)) * pow_rational(a, e[0] - s);
      if (cx == 0) continue;
      for (int t = 0; t <= e[1]; ++t) {
        const Rational cy = Rational(binomial(e[1], t)) * pow_rational(b, e[1] - t);
        if (cy == 0) continue;
        out.add_term({s, t}, c * cx * cy);
      }
    }
  }
  return out;
}

BiPoly partial_derivative(const BiPoly& f, std::size_t var) {
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    auto d = e;
    d[var] -= 1;
    out.add_term(d, c * e[var]);
  }
  return out;
}

namespace {

// f as a polynomial in y with coefficients in Q[x].
using YPoly = std::vector<UPoly>;

YPoly to_ypoly(const BiPoly& f) {
  YPoly out(static_cast<std::size_t>(f.max_exponent(1) + 1));
  for (const auto& [e, c] : f.terms()) {
    UPoly& coef = out[static_cast<std::size_t>(e[1])];
    if (coef.size() <= static_cast<std::size_t>(e[0])) coef.resize(static_cast<std::size_t>(e[0]) + 1);
    coef[static_cast<std::size_t>(e[0])] += c;
  }
  for (auto& c : out) upoly::trim(c);
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

BiPoly from_ypoly(const YPoly& p) {
  BiPoly out;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i) out.add_term({static_cast<int>(i), static_cast<int>(j)}, p[j][i]);
  return out;
}

void trim_y(YPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly content(const YPoly& p) {
  UPoly g;
  for (const auto& c : p) g = upoly::gcd(g, c);
  return g;
}

YPoly primitive_part(const YPoly& p) {
  const UPoly c = content(p);
  YPoly out;
  for (const auto& coef : p) out.push_back(upoly::divmod(coef, c).first);
  return out;
}

// lc(b)^k * a mod b, computed by repeated leading-term elimination.
YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const UPoly& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const UPoly la = a.back();
    for (auto& c : a) c = upoly::mul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = upoly::sub(a[i + shift], upoly::mul(la, b[i]));
    trim_y(a);
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  YPoly p = to_ypoly(a);
  YPoly q = to_ypoly(b);
  if (p.empty() && q.empty()) return {};
  if (p.size() < q.size()) std::swap(p, q);
  if (q.empty()) {
    const BiPoly out = from_ypoly(p);
    return out / out.terms().begin()->second;
  }
  const UPoly c = upoly::gcd(content(p), content(q));
  p = primitive_part(p);
  q = primitive_part(q);
  while (!q.empty()) {
    YPoly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.empty() ? r : primitive_part(r);
  }
  BiPoly out = from_ypoly(p);
  BiPoly cx;
  for (std::size_t i = 0; i < c.size(); ++i) cx.add_term({static_cast<int>(i), 0}, c[i]);
  out = out * cx;
  return out / out.terms().begin()->second;
}

bool is_squarefree(const BiPoly& f) {
  if (f.is_zero()) return false;
  const BiPoly g = gcd(gcd(f, partial_derivative(f, 0)), partial_derivative(f, 1));
  return g.degree() == 0;
}

}  // namespace nodepoly

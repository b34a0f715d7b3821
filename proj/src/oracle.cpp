#include "nodepoly/oracle.hpp"

#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nodepoly {

namespace {

int weight(const CHOracle::Tangency& v) {
  int w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) w += static_cast<int>(i + 1) * v[i];
  return w;
}

int length(const CHOracle::Tangency& v) { return std::accumulate(v.begin(), v.end(), 0); }

CHOracle::Tangency trimmed(CHOracle::Tangency v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

int entry(const CHOracle::Tangency& v, std::size_t i) { return i < v.size() ? v[i] : 0; }

std::string key(int degree, int delta, const CHOracle::Tangency& alpha, const CHOracle::Tangency& beta) {
  std::ostringstream out;
  out << degree << ';' << delta << ';';
  for (int a : alpha) out << a << ',';
  out << ';';
  for (int b : beta) out << b << ',';
  return out.str();
}

// All gamma >= 0 with weight(gamma) = total, using contact orders up to max_order.
void partitions(int total, int max_order, CHOracle::Tangency& current,
                const std::function<void(const CHOracle::Tangency&)>& visit) {
  if (total == 0) {
    visit(current);
    return;
  }
  if (max_order == 0) return;
  for (int count = 0; count * max_order <= total; ++count) {
    current[static_cast<std::size_t>(max_order - 1)] = count;
    partitions(total - count * max_order, max_order - 1, current, visit);
  }
  current[static_cast<std::size_t>(max_order - 1)] = 0;
}

int max_nodes_irreducible(int m) { return (m - 1) * (m - 2) / 2; }

int point_conditions(int m, int delta) { return m * (m + 3) / 2 - delta; }

}  // namespace

Integer CHOracle::relative(int degree, int delta, const Tangency& alpha_in, const Tangency& beta_in) {
  const Tangency alpha = trimmed(alpha_in);
  const Tangency beta = trimmed(beta_in);
  if (degree < 0 || delta < 0) return 0;
  for (int a : alpha)
    if (a < 0) return 0;
  for (int b : beta)
    if (b < 0) return 0;
  if (weight(alpha) + weight(beta) != degree) return 0;
  if (degree == 0) return delta == 0 ? 1 : 0;

  const std::string k = key(degree, delta, alpha, beta);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  Integer total = 0;
  // degenerations where an unassigned contact point moves to a fixed point of L
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    Tangency a2 = alpha;
    Tangency b2 = beta;
    if (a2.size() <= i) a2.resize(i + 1, 0);
    a2[i] += 1;
    b2[i] -= 1;
    total += static_cast<long>(i + 1) * relative(degree, delta, a2, b2);
  }
  // degenerations where the curve breaks off L
  const std::size_t orders = static_cast<std::size_t>(degree);
  Tangency alpha_prime(alpha.size(), 0);
  std::function<void(std::size_t)> choose_alpha = [&](std::size_t i) {
    if (i < alpha.size()) {
      for (int c = 0; c <= alpha[i]; ++c) {
        alpha_prime[i] = c;
        choose_alpha(i + 1);
      }
      alpha_prime[i] = 0;
      return;
    }
    const int rest = degree - 1 - weight(alpha_prime) - weight(beta);
    if (rest < 0) return;
    Tangency gamma(orders, 0);
    partitions(rest, static_cast<int>(orders), gamma, [&](const Tangency& g) {
      const int delta_prime = delta - (degree - 1) + length(g);
      if (delta_prime < 0) return;
      Tangency beta_prime(std::max(beta.size(), g.size()), 0);
      Integer factor = 1;
      for (std::size_t j = 0; j < beta_prime.size(); ++j) {
        beta_prime[j] = entry(beta, j) + entry(g, j);
        for (int t = 0; t < entry(g, j); ++t) factor *= static_cast<long>(j + 1);
        factor *= binomial(beta_prime[j], entry(beta, j));
      }
      for (std::size_t j = 0; j < alpha.size(); ++j) factor *= binomial(alpha[j], alpha_prime[j]);
      total += factor * relative(degree - 1, delta_prime, alpha_prime, beta_prime);
    });
  };
  choose_alpha(0);

  memo_.emplace(k, total);
  return total;
}

Integer CHOracle::severi_degree(int m, int delta) {
  if (m < 1 || delta < 0) throw std::invalid_argument("severi_degree needs m >= 1 and delta >= 0");
  Tangency beta(static_cast<std::size_t>(1), m);
  return relative(m, delta, {}, beta);
}

// Sum over multisets of irreducible components (degree m_i, delta_i) with
// sum m_i = m and sum delta_i + sum_{i<j} m_i m_j = delta of the ways to split
// the point conditions among them.
Integer CHOracle::assemble(int m, int delta, bool reducible_only) {
  struct Part {
    int degree, delta;
  };
  std::vector<Part> parts;
  Integer total = 0;
  const int points = point_conditions(m, delta);
  std::function<void(int, Part)> extend = [&](int remaining, Part bound) {
    if (remaining == 0) {
      if (reducible_only && parts.size() < 2) return;
      int nodes = 0;
      int degree_sum = 0;
      for (const auto& p : parts) {
        nodes += p.delta + degree_sum * p.degree;
        degree_sum += p.degree;
      }
      if (nodes != delta) return;
      Rational ways(factorial(points));
      std::size_t run = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        ways /= Rational(factorial(point_conditions(parts[i].degree, parts[i].delta)));
        run = (i > 0 && parts[i].degree == parts[i - 1].degree && parts[i].delta == parts[i - 1].delta) ? run + 1 : 1;
        ways /= Rational(static_cast<long>(run));  // accumulates to (multiplicity)! over a run of equal parts
        ways *= Rational(irreducible(parts[i].degree, parts[i].delta));
        if (ways == 0) return;
      }
      if (!is_integer(ways)) throw std::logic_error("non-integral component assembly");
      total += ways.get_num();
      return;
    }
    for (int d = std::min(remaining, bound.degree); d >= 1; --d) {
      const int top = d == bound.degree ? std::min(bound.delta, max_nodes_irreducible(d)) : max_nodes_irreducible(d);
      for (int e = top; e >= 0; --e) {
        if (reducible_only && parts.empty() && d == m) continue;
        parts.push_back({d, e});
        extend(remaining - d, {d, e});
        parts.pop_back();
      }
    }
  };
  extend(m, {m, max_nodes_irreducible(m)});
  return total;
}

Integer CHOracle::irreducible(int m, int delta) {
  if (m < 1 || delta < 0) throw std::invalid_argument("irreducible count needs m >= 1 and delta >= 0");
  if (delta > max_nodes_irreducible(m)) return 0;
  if (auto it = irreducible_.find({m, delta}); it != irreducible_.end()) return it->second;
  const Integer value = severi_degree(m, delta) - assemble(m, delta, true);
  irreducible_.emplace(std::make_pair(m, delta), value);
  return value;
}

Integer CHOracle::total_nodal_count(int m, int delta) {
  if (m < 1) throw std::invalid_argument("total_nodal_count needs m >= 1");
  if (delta < 0 || delta > 3) throw std::invalid_argument("total_nodal_count is validated for 0 <= delta <= 3 only");
  return assemble(m, delta, false);
}

void CHOracle::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& [k, v] : memo_) out << k << ' ' << v.get_str() << '\n';
}

void CHOracle::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string k;
  std::string v;
  while (in >> k >> v) memo_.insert_or_assign(k, Integer(v));
}

CHOracle& default_oracle() {
  static CHOracle oracle;
  return oracle;
}

Integer ch_irreducible(int m, int delta) { return default_oracle().irreducible(m, delta); }

Integer total_nodal_count(int m, int delta) { return default_oracle().total_nodal_count(m, delta); }

}  // namespace nodepoly

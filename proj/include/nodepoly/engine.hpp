#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodepoly/symcalc.hpp"

namespace nodepoly {

/// Raised when a computed polynomial disagrees with its reference value.
class MismatchError : public std::runtime_error {
 public:
  MismatchError(const std::string& label, const std::string& computed, const std::string& expected,
                const std::string& difference);
  const std::string& label() const { return label_; }
  const std::string& difference() const { return difference_; }

 private:
  std::string label_;
  std::string difference_;
};

enum class Checking { kAgainstReference, kNone };

/// P_0 .. P_{r_max} from sum P_r t^r/r! = exp(sum a_q t^q/q!), where a[q-1] = a_q.
/// Uses P_{n+1} = sum_{q=0}^{n} C(n,q) a_{q+1} P_{n-q}.
template <class Ring>
std::vector<Ring> exp_transform(std::span<const Ring> a, int r_max) {
  if (r_max < 0 || static_cast<std::size_t>(r_max) > a.size())
    throw std::invalid_argument("exp_transform: need a_1..a_r_max");
  std::vector<Ring> p;
  p.reserve(static_cast<std::size_t>(r_max) + 1);
  p.emplace_back(Ring(1));
  for (int n = 0; n < r_max; ++n) {
    Ring next;
    for (int q = 0; q <= n; ++q) {
      const Rational c(binomial(n, q));
      next += (a[static_cast<std::size_t>(q)] * p[static_cast<std::size_t>(n - q)]) * c;
    }
    p.push_back(std::move(next));
  }
  return p;
}

/// Inverse of exp_transform: recovers a_1..a_n from P_0 = 1, P_1..P_n.
template <class Ring>
std::vector<Ring> log_transform(std::span<const Ring> p) {
  if (p.empty()) throw std::invalid_argument("log_transform: need P_0");
  std::vector<Ring> a;
  for (std::size_t n = 0; n + 1 < p.size(); ++n) {
    Ring next = p[n + 1];
    for (std::size_t q = 0; q < n; ++q) {
      const Rational c(binomial(static_cast<long>(n), static_cast<long>(q)));
      next -= (a[q] * p[n - q]) * c;
    }
    a.push_back(std::move(next));
  }
  return a;
}

/// The polynomial P_n(a_1, ..., a_n) alone.
template <class Ring>
Ring exp_polynomial(std::span<const Ring> a, int n) {
  return exp_transform<Ring>(a, n).back();
}

/// b_1 .. b_{r_max}, each a class of weighted degree q + 2 in v, w1, w2.
std::vector<ClassPoly> b_sequence(int r_max);

struct NodePolynomials {
  std::vector<NodePolynomial> linear_forms;  // a_1 .. a_r
  std::vector<NodePolynomial> counts;        // N_1 .. N_r
};

/// a_q = pushforward of b_q and N_r = P_r(a)/r!, for 1 <= r_max <= 8.
/// With Checking::kAgainstReference every a_q is compared with the reference
/// linear forms and a MismatchError is thrown on disagreement.
NodePolynomials node_polynomials(int r_max, Checking check = Checking::kAgainstReference);

/// N(3), N(3,2), N(3,2,2), N(3,2,2,2): an ordinary triple point plus j nodes.
std::array<NodePolynomial, 4> triple_point_polynomials(Checking check = Checking::kAgainstReference);

/// N(3(2)), N(3(2),2), N(3(2)'): a D6 point, a D6 point plus a node, an E7 point.
std::array<NodePolynomial, 3> level2_polynomials(Checking check = Checking::kAgainstReference);

namespace reference {

/// Reference values, transcribed exactly.
const std::vector<NodePolynomial>& linear_forms();  // a_1 .. a_8
const ClassPoly& xclass(int i);                     // [X_2], [X_3], [X_4]

struct NamedFormula {
  std::string name;
  NodePolynomial value;
};
/// N(3), N(3,2), N(3,2,2), N(3,2,2,2), N(3(2)), N(3(2),2), N(3(2)') in that order.
const std::vector<NamedFormula>& singular_formulas();

}  // namespace reference

/// Throws MismatchError when computed != expected.
void expect_equal(const std::string& label, const NodePolynomial& computed, const NodePolynomial& expected);
void expect_equal(const std::string& label, const ClassPoly& computed, const ClassPoly& expected);

}  // namespace nodepoly

#include "nodepoly/resolve.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace nodepoly {

namespace {

// A point of the blown-up surface in local coordinates (u, w) centred at it:
// the strict transform of the curve there, and the exceptional curves
// through it. axes[0] tags the curve {u = 0}, axes[1] the curve {w = 0};
// the tag is whatever the caller attached to that exceptional curve.
struct LocalPoint {
  BiPoly germ;
  std::array<std::optional<int>, 2> axes;
};

struct ExceptionalPoint {
  LocalPoint point;
  std::string center;
};

struct BlowupResult {
  int multiplicity = 0;
  std::vector<ExceptionalPoint> points;  // rational points on the curve or on two exceptional curves
  int irrational_transverse = 0;         // simple intersections with E at irrational points
  bool irrational_tangent = false;       // a multiple intersection at an irrational point
};

int order(const BiPoly& g) { return g.is_zero() ? -1 : g.low_degree(); }

void check_size(const BiPoly& g, std::size_t max_bits) {
  for (const auto& [e, c] : g.terms())
    if (mpz_sizeinbase(c.get_num_mpz_t(), 2) > max_bits || mpz_sizeinbase(c.get_den_mpz_t(), 2) > max_bits)
      throw ResolveError(ResolveError::Kind::kLimit, "coefficient size bound exceeded while resolving");
}

// Blows up the origin; the new exceptional curve is tagged `tag`.
// Chart 1: x = u, y = u w, E = {u = 0}. Chart 2: x = u w, y = w, E = {w = 0};
// only its origin (the direction x = 0) is not already visible in chart 1.
BlowupResult blow_up(const LocalPoint& p, int tag, std::size_t max_bits) {
  BlowupResult out;
  const int m = std::max(order(p.germ), 0);
  out.multiplicity = m;

  BiPoly chart1;
  BiPoly chart2;
  UPoly restriction(static_cast<std::size_t>(m) + 1);
  for (const auto& [e, c] : p.germ.terms()) {
    chart1.add_term({e[0] + e[1] - m, e[1]}, c);
    chart2.add_term({e[0], e[0] + e[1] - m}, c);
    if (e[0] + e[1] == m) restriction[static_cast<std::size_t>(e[1])] += c;
  }
  upoly::trim(restriction);

  bool origin_seen = false;
  for (const auto& [factor, mult] : upoly::squarefree_decomposition(restriction)) {
    const auto roots = upoly::rational_roots(factor);
    const int irrational = upoly::degree(factor) - static_cast<int>(roots.size());
    if (irrational > 0) {
      if (mult >= 2) out.irrational_tangent = true;
      else out.irrational_transverse += irrational;
    }
    for (const Rational& c : roots) {
      LocalPoint q{translate(chart1, 0, c), {tag, std::nullopt}};
      if (c == 0) {
        q.axes[1] = p.axes[1];
        origin_seen = true;
      }
      check_size(q.germ, max_bits);
      out.points.push_back({std::move(q), "chart 1, y/x = " + c.get_str()});
    }
  }
  if (!origin_seen && p.axes[1]) out.points.push_back({{chart1, {tag, p.axes[1]}}, "chart 1, y/x = 0"});
  if (chart2.constant_term() == 0 || p.axes[0])
    out.points.push_back({{chart2, {p.axes[0], tag}}, "chart 2, x/y = 0"});
  return out;
}

void require_reduced_at_origin(const BiPoly& f) {
  const BiPoly g = gcd(gcd(f, partial_derivative(f, 0)), partial_derivative(f, 1));
  if (g.degree() > 0 && g.constant_term() == 0)
    throw ResolveError(ResolveError::Kind::kNotReduced, "germ " + f.to_string() + " has a repeated factor through the origin");
}

void require_on_curve(const BiPoly& f) {
  if (f.is_zero() || f.constant_term() != 0)
    throw ResolveError(ResolveError::Kind::kNotOnCurve, "germ " + f.to_string() + " does not vanish at the origin");
}

// A smooth branch is followed further only while it is tangent to an
// exceptional curve: the next point is then a satellite.
bool tangent_to_exceptional(const LocalPoint& p) {
  const Rational a = p.germ.coefficient({1, 0});
  const Rational b = p.germ.coefficient({0, 1});
  return (p.axes[0] && b == 0) || (p.axes[1] && a == 0);
}

class Resolver {
 public:
  explicit Resolver(const ResolveOptions& options) : options_(options) {}

  Resolution run(const BiPoly& germ) {
    require_on_curve(germ);
    require_reduced_at_origin(germ);
    visit(LocalPoint{germ, {}}, std::nullopt, "origin", 0);
    mark_essential();
    Resolution out;
    for (const auto& pt : trace_.points)
      if (pt.essential) out.diagram.add(Vertex{pt.id, pt.multiplicity, pt.parent, pt.remote});
    const auto report = validate(out.diagram);
    if (!report.ok())
      throw std::logic_error("extracted diagram breaks the laws:\n" + report.to_string() + to_text(out.diagram));
    out.trace = std::move(trace_);
    return out;
  }

 private:
  void visit(const LocalPoint& p, std::optional<int> parent, const std::string& center, int depth) {
    const int id = static_cast<int>(trace_.points.size());
    const int m = order(p.germ);
    TracePoint tp;
    tp.id = id;
    tp.parent = parent;
    tp.multiplicity = m;
    tp.center = center;
    tp.total_transform_coefficient = m;
    for (const auto& axis : p.axes) {
      if (!axis) continue;
      if (*axis != parent) tp.remote = *axis;
      tp.total_transform_coefficient += trace_.points[static_cast<std::size_t>(*axis)].total_transform_coefficient;
    }
    trace_.points.push_back(tp);

    if (m < 2 && !(m == 1 && tangent_to_exceptional(p))) {
      ++trace_.branches;
      return;
    }
    if (depth >= options_.max_depth)
      throw ResolveError(ResolveError::Kind::kLimit, "resolution depth bound exceeded");
    const BlowupResult res = blow_up(p, id, options_.max_coefficient_bits);
    if (res.irrational_tangent)
      throw ResolveError(ResolveError::Kind::kIrrationalCenter,
                         "an infinitely near point tangent to the exceptional curve has irrational coordinates");
    trace_.branches += res.irrational_transverse;
    for (const auto& q : res.points)
      if (order(q.point.germ) >= 1) visit(q.point, id, q.center, depth + 1);
  }

  void mark_essential() {
    // children come after their parents
    for (auto it = trace_.points.rbegin(); it != trace_.points.rend(); ++it) {
      if (it->multiplicity >= 2 || it->remote) it->essential = true;
      if (it->essential && it->parent) trace_.points[static_cast<std::size_t>(*it->parent)].essential = true;
    }
  }

  ResolveOptions options_;
  ResolutionTrace trace_;
};

}  // namespace

BiPoly parse_germ(std::string_view text) {
  BiPoly g = parse_bipoly(text);
  require_on_curve(g);
  return g;
}

BiPoly localize(const BiPoly& f, const Rational& a, const Rational& b) { return translate(f, a, b); }

MultiGerm multigerm_from_product(const std::vector<PlacedGerm>& placed) {
  BiPoly product(1);
  for (const auto& p : placed) product = product * translate(p.germ, -p.a, -p.b);
  MultiGerm out;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = 0; j < placed.size(); ++j) {
      if (i == j) continue;
      if (translate(placed[j].germ, placed[i].a - placed[j].a, placed[i].b - placed[j].b).constant_term() == 0)
        throw std::invalid_argument("placed germs meet at a common point");
    }
    out.germs.push_back(localize(product, placed[i].a, placed[i].b));
  }
  return out;
}

Resolution resolve_germ(const BiPoly& germ, const ResolveOptions& options) { return Resolver(options).run(germ); }

GermReport germ_characters(const BiPoly& germ, const ResolveOptions& options) {
  const Resolution res = resolve_germ(germ, options);
  const CharacterSet c = characters(res.diagram);
  GermReport out;
  out.diagram = res.diagram;
  out.mu = c.mu;
  out.delta = c.delta;
  out.sing_points = c.rts;
  out.branches = c.rts > 0 ? res.trace.branches : 0;
  if (out.mu != 2 * out.delta - out.branches + out.sing_points)
    throw std::logic_error("Milnor-Jung identity fails for " + germ.to_string());
  return out;
}

GermReport germ_characters(const MultiGerm& germs, const ResolveOptions& options) {
  GermReport out;
  for (const auto& g : germs.germs) {
    const GermReport one = germ_characters(g, options);
    out.diagram = disjoint_union(out.diagram, one.diagram);
    out.mu += one.mu;
    out.delta += one.delta;
    out.branches += one.branches;
    out.sing_points += one.sing_points;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Milnor number

namespace {

// dim Q[x,y] / ((f_x, f_y) + m^n)
int truncated_colength(const BiPoly& fx, const BiPoly& fy, int n) {
  // monomials of degree < n, indexed in increasing degree
  auto index = [](int a, int b) { return (a + b) * (a + b + 1) / 2 + b; };
  const int columns = n * (n + 1) / 2;
  std::map<int, std::map<int, Rational>> pivots;  // pivot column -> row with that leading column
  auto reduce_and_insert = [&](std::map<int, Rational> row) {
    while (!row.empty()) {
      const auto lead = row.begin();
      const auto pv = pivots.find(lead->first);
      if (pv == pivots.end()) {
        const Rational s = lead->second;
        for (auto& [k, v] : row) v /= s;
        pivots.emplace(lead->first, std::move(row));
        return;
      }
      const Rational s = lead->second;
      for (const auto& [k, v] : pv->second) {
        auto& entry = row[k];
        entry -= s * v;
        if (entry == 0) row.erase(k);
      }
    }
  };
  for (const BiPoly* g : {&fx, &fy}) {
    const int low = order(*g);
    if (low < 0) continue;
    for (int d = 0; d + low < n; ++d)
      for (int a = 0; a <= d; ++a) {
        std::map<int, Rational> row;
        for (const auto& [e, c] : g->terms()) {
          const int x = e[0] + a;
          const int y = e[1] + d - a;
          if (x + y < n) row[index(x, y)] += c;
        }
        reduce_and_insert(std::move(row));
      }
  }
  return columns - static_cast<int>(pivots.size());
}

}  // namespace

int milnor_oracle(const BiPoly& germ, int max_cutoff) {
  require_on_curve(germ);
  const BiPoly fx = partial_derivative(germ, 0);
  const BiPoly fy = partial_derivative(germ, 1);
  // dim is nondecreasing in the cutoff, so equal values at n and 2n force
  // m^n inside (f_x, f_y) + m^(n+1), hence inside the local Jacobian ideal.
  int n = 2;
  int previous = truncated_colength(fx, fy, n);
  while (2 * n <= max_cutoff) {
    n *= 2;
    const int current = truncated_colength(fx, fy, n);
    if (current == previous) return current;
    previous = current;
  }
  throw ResolveError(ResolveError::Kind::kNotIsolated,
                     "Milnor number of " + germ.to_string() + " did not stabilize below cutoff " +
                         std::to_string(max_cutoff));
}

// ---------------------------------------------------------------------------
// Singularity sequences

namespace {

using Counts = std::vector<Integer>;  // counts[j] = sequences of length j

// Sequences on independent points interleave freely.
Counts shuffle(const Counts& a, const Counts& b, int length) {
  Counts out(static_cast<std::size_t>(length) + 1, 0);
  for (int n = 0; n <= length; ++n)
    for (int k = 0; k <= n; ++k)
      out[static_cast<std::size_t>(n)] +=
          binomial(n, k) * a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
  return out;
}

class SequenceCounter {
 public:
  // Axis tags are the coefficients of the exceptional curves in the current divisor.
  Counts count(const LocalPoint& p, int length) {
    std::ostringstream key;
    key << p.germ.to_string() << '|' << (p.axes[0] ? *p.axes[0] : -1) << '|' << (p.axes[1] ? *p.axes[1] : -1) << '|'
        << length;
    if (auto it = memo_.find(key.str()); it != memo_.end()) return it->second;

    Counts out(static_cast<std::size_t>(length) + 1, 0);
    out[0] = 1;
    const int mult = multiplicity(p);
    if (mult >= 2 && length >= 1) {
      const int coefficient = mult - 2;
      const int rest = length - 1;
      if (rest >= 1 && coefficient >= 2)
        throw ResolveError(ResolveError::Kind::kInfinite,
                           "every point of an exceptional curve has multiplicity >= 2; infinitely many sequences");
      const BlowupResult res = blow_up(p, coefficient, ResolveOptions{}.max_coefficient_bits);
      if (rest >= 1 && (res.irrational_tangent || (res.irrational_transverse > 0 && coefficient >= 1)))
        throw ResolveError(ResolveError::Kind::kIrrationalCenter,
                           "a candidate center has irrational coordinates; use a split form");
      Counts below(static_cast<std::size_t>(rest) + 1, 0);
      below[0] = 1;
      for (const auto& q : res.points)
        if (multiplicity(q.point) >= 2) below = shuffle(below, count(q.point, rest), rest);
      for (int j = 1; j <= length; ++j) out[static_cast<std::size_t>(j)] = below[static_cast<std::size_t>(j - 1)];
    }
    memo_.emplace(key.str(), out);
    return out;
  }

  static int multiplicity(const LocalPoint& p) {
    int m = std::max(order(p.germ), 0);
    for (const auto& axis : p.axes)
      if (axis) m += *axis;
    return m;
  }

 private:
  std::map<std::string, Counts> memo_;
};

}  // namespace

Integer count_node_sequences(const MultiGerm& germs, int r) {
  if (r < 1 || r > 7) throw std::invalid_argument("count_node_sequences: r must be between 1 and 7");
  SequenceCounter counter;
  Counts total(static_cast<std::size_t>(r) + 1, 0);
  total[0] = 1;
  for (const auto& g : germs.germs) {
    require_on_curve(g);
    require_reduced_at_origin(g);
    total = shuffle(total, counter.count(LocalPoint{g, {}}, r), r);
  }
  return total[static_cast<std::size_t>(r)];
}

Integer count_node_sequences(const BiPoly& germ, int r) { return count_node_sequences(MultiGerm{{germ}}, r); }

}  // namespace nodepoly

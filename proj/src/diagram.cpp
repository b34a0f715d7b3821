#include "nodepoly/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace nodepoly {

// ---------------------------------------------------------------------------
// Diagram accessors

VertexId Diagram::add(int weight, std::optional<VertexId> parent, std::optional<VertexId> remote) {
  const VertexId id = vertices_.empty() ? 0 : max_id() + 1;
  vertices_.push_back(Vertex{id, weight, parent, remote});
  return id;
}

const Vertex* Diagram::find(VertexId id) const {
  for (const auto& v : vertices_)
    if (v.id == id) return &v;
  return nullptr;
}

const Vertex& Diagram::at(VertexId id) const {
  const Vertex* v = find(id);
  if (v == nullptr) throw std::out_of_range("no vertex with id " + std::to_string(id));
  return *v;
}

std::vector<VertexId> Diagram::roots() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (!v.parent) out.push_back(v.id);
  return out;
}

std::vector<VertexId> Diagram::children(VertexId id) const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (v.parent == id) out.push_back(v.id);
  return out;
}

std::vector<VertexId> Diagram::proximate_to(VertexId id) const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_)
    if (v.parent == id || v.remote == id) out.push_back(v.id);
  return out;
}

std::vector<VertexId> Diagram::ancestors(VertexId id) const {
  std::vector<VertexId> out;
  const Vertex* v = &at(id);
  while (v->parent) {
    if (out.size() > vertices_.size()) throw std::logic_error("cycle in parent links");
    out.push_back(*v->parent);
    v = &at(*v->parent);
  }
  return out;
}

VertexId Diagram::max_id() const {
  VertexId m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.id);
  return m;
}

// ---------------------------------------------------------------------------
// Validation

std::string_view law_name(Law law) {
  switch (law) {
    case Law::kProximity:
      return "Law of Proximity";
    case Law::kProximityInequality:
      return "Proximity Inequality";
    case Law::kSuccession:
      return "Law of Succession";
    case Law::kMinimality:
      return "Law of Minimality";
  }
  return "unknown law";
}

bool ValidationReport::violates(Law law) const {
  return std::any_of(violations.begin(), violations.end(), [law](const Violation& v) { return v.law == law; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& e : structural_errors) out += "structural error: " + e + "\n";
  for (const auto& v : violations) {
    out += std::string(law_name(v.law)) + " violated at vertices";
    for (VertexId id : v.vertices) out += " " + std::to_string(id);
    out += ": " + v.message + "\n";
  }
  return out;
}

namespace {

std::vector<std::string> structural_errors(const Diagram& d) {
  std::vector<std::string> errors;
  std::set<VertexId> seen;
  for (const auto& v : d.vertices()) {
    if (!seen.insert(v.id).second) errors.push_back("duplicate vertex id " + std::to_string(v.id));
    if (v.weight < 1) errors.push_back("vertex " + std::to_string(v.id) + " has weight < 1");
  }
  for (const auto& v : d.vertices()) {
    if (v.parent && !seen.count(*v.parent))
      errors.push_back("vertex " + std::to_string(v.id) + " has dangling parent " + std::to_string(*v.parent));
    if (v.remote && !seen.count(*v.remote))
      errors.push_back("vertex " + std::to_string(v.id) + " has dangling remote " + std::to_string(*v.remote));
  }
  if (!errors.empty()) return errors;
  for (const auto& v : d.vertices()) {
    const Vertex* cur = &v;
    std::size_t steps = 0;
    while (cur->parent && steps <= d.size()) {
      cur = d.find(*cur->parent);
      ++steps;
    }
    if (steps > d.size()) {
      errors.push_back("parent links of vertex " + std::to_string(v.id) + " form a cycle");
      break;
    }
  }
  return errors;
}

}  // namespace

ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  report.structural_errors = structural_errors(d);
  if (!report.well_formed()) return report;
  auto violation = [&report](Law law, std::vector<VertexId> ids, std::string message) {
    report.violations.push_back({law, std::move(ids), std::move(message)});
  };

  for (const auto& v : d.vertices()) {
    if (!v.remote) continue;
    const VertexId t = *v.remote;
    if (!v.parent) {
      violation(Law::kProximity, {v.id}, "a root is proximate to no vertex");
      continue;
    }
    if (t == *v.parent) {
      violation(Law::kProximity, {v.id, t}, "the remote target must not be the immediate predecessor");
      continue;
    }
    const auto anc = d.ancestors(v.id);
    const auto pos = std::find(anc.begin(), anc.end(), t);
    if (pos == anc.end()) {
      violation(Law::kProximity, {v.id, t}, "the remote target is not a predecessor");
      continue;
    }
    for (auto it = anc.begin(); it != pos; ++it) {
      const Vertex& u = d.at(*it);
      if (u.parent != t && u.remote != t)
        violation(Law::kProximity, {v.id, u.id, t}, "a vertex between a satellite and its target is not proximate to it");
    }
  }

  for (const auto& v : d.vertices()) {
    int sum = 0;
    for (VertexId w : d.proximate_to(v.id)) sum += d.at(w).weight;
    if (sum > v.weight) {
      auto ids = d.proximate_to(v.id);
      ids.insert(ids.begin(), v.id);
      violation(Law::kProximityInequality, ids,
                "weight " + std::to_string(v.weight) + " < total proximate weight " + std::to_string(sum));
    }
  }

  for (const auto& v : d.vertices()) {
    const auto kids = d.children(v.id);
    if (static_cast<int>(kids.size()) > v.weight)
      violation(Law::kSuccession, {v.id}, "more immediate successors than the weight");
    std::vector<VertexId> targets;
    std::vector<VertexId> sats;
    for (VertexId c : kids) {
      if (const auto& r = d.at(c).remote) {
        targets.push_back(*r);
        sats.push_back(c);
      }
    }
    if (sats.size() > 2) {
      sats.insert(sats.begin(), v.id);
      violation(Law::kSuccession, sats, "more than two immediate successors are satellites");
    } else if (sats.size() == 2 && targets[0] == targets[1]) {
      violation(Law::kSuccession, {v.id, sats[0], sats[1]}, "two satellite successors share a remote target");
    }
  }

  for (const auto& v : d.vertices())
    if (v.weight == 1 && !v.remote && d.children(v.id).empty())
      violation(Law::kMinimality, {v.id}, "a leaf of weight 1 is free");

  return report;
}

// ---------------------------------------------------------------------------
// Characters

CharacterSet& CharacterSet::operator+=(const CharacterSet& o) {
  frs += o.frs;
  rts += o.rts;
  dim += o.dim;
  deg += o.deg;
  cod += o.cod;
  delta += o.delta;
  r += o.r;
  mu += o.mu;
  return *this;
}

CharacterSet characters(const Diagram& d) {
  CharacterSet c;
  for (const auto& v : d.vertices()) {
    if (!v.remote) ++c.frs;
    if (!v.parent) ++c.rts;
    c.deg += v.weight * (v.weight + 1) / 2;
    c.delta += v.weight * (v.weight - 1) / 2;
    int excess = v.weight;
    for (const auto& w : d.vertices())
      if (w.parent == v.id || w.remote == v.id) excess -= w.weight;
    c.r += excess;
  }
  c.dim = c.rts + c.frs;
  c.cod = c.deg - c.dim;
  c.mu = 2 * c.delta - c.r + c.rts;
  return c;
}

// ---------------------------------------------------------------------------
// Families

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::invalid_argument(what);
}

// A_k hanging from `parent` (or as a new root).
void append_a(Diagram& d, int k, std::optional<VertexId> parent) {
  const int i = (k + 1) / 2;
  VertexId last = d.add(2, parent);
  for (int n = 1; n < i; ++n) last = d.add(2, last);
  if (k % 2 == 0) {
    const VertexId s = d.add(1, last);
    d.add(1, s, last);
  }
}

void append_d(Diagram& d, int k, std::optional<VertexId> parent) {
  const VertexId root = d.add(3, parent);
  if (k == 5) {
    const VertexId s = d.add(1, root);
    d.add(1, s, root);
  } else if (k >= 6) {
    append_a(d, k - 5, root);
  }
}

}  // namespace

Diagram make_family(std::string_view family, const std::vector<int>& params) {
  const std::string name(family);
  auto need = [&](std::size_t n) {
    require(params.size() == n, "family " + name + " takes " + std::to_string(n) + " parameter(s)");
  };
  Diagram d;
  if (family == "A") {
    need(1);
    require(params[0] >= 1, "A_k needs k >= 1");
    append_a(d, params[0], std::nullopt);
  } else if (family == "D") {
    need(1);
    require(params[0] >= 4, "D_k needs k >= 4");
    append_d(d, params[0], std::nullopt);
  } else if (family == "E") {
    need(1);
    const int k = params[0];
    require(k >= 6 && k % 6 <= 2, "E_k needs k = 6l + j with l >= 1 and j in {0, 1, 2}");
    const int l = k / 6;
    const int j = k % 6;
    VertexId last = d.add(3);
    for (int n = 1; n < l; ++n) last = d.add(3, last);
    if (j == 0) {
      const VertexId s = d.add(1, last);
      const VertexId v = d.add(1, s, last);
      d.add(1, v, last);
    } else {
      const VertexId s = d.add(2, last);
      const VertexId t = d.add(1, s, last);
      if (j == 2) d.add(1, t, s);
    }
  } else if (family == "J") {
    need(2);
    require(params[0] >= 2 && params[1] >= 0, "J_{l,k} needs l >= 2 and k >= 0");
    VertexId last = d.add(3);
    for (int n = 2; n < params[0]; ++n) last = d.add(3, last);
    append_d(d, params[1] + 4, last);
  } else if (family == "X1") {
    need(1);
    require(params[0] >= 0 && params[0] <= 2, "X_{1,k} needs k in {0, 1, 2}");
    const VertexId root = d.add(4);
    if (params[0] == 1) {
      const VertexId s = d.add(1, root);
      d.add(1, s, root);
    } else if (params[0] == 2) {
      d.add(2, root);
    }
  } else if (family == "Z11") {
    need(0);
    const VertexId root = d.add(4);
    const VertexId s = d.add(1, root);
    const VertexId v = d.add(1, s, root);
    d.add(1, v, root);
  } else if (family == "Y11") {
    need(0);
    const VertexId root = d.add(4);
    for (int n = 0; n < 2; ++n) {
      const VertexId s = d.add(1, root);
      d.add(1, s, root);
    }
  } else {
    throw std::invalid_argument("unknown diagram family '" + name + "'");
  }
  return d;
}

namespace {

int parse_int(std::string_view s, const std::string& context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed number '" + std::string(s) + "' in " + context);
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Diagram parse_single_name(std::string_view name) {
  const std::string context = "diagram name '" + std::string(name) + "'";
  if (name == "Z11") return make_family("Z11", {});
  if (name == "Y11" || name == "Y1,1") return make_family("Y11", {});
  if (name.size() < 2) throw std::invalid_argument("unknown " + context);
  const char f = name.front();
  std::string_view rest = name.substr(1);
  if (f == 'A' || f == 'D' || f == 'E') return make_family(std::string(1, f), {parse_int(rest, context)});
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("unknown " + context);
  const int first = parse_int(rest.substr(0, comma), context);
  const int second = parse_int(rest.substr(comma + 1), context);
  if (f == 'J') return make_family("J", {first, second});
  if (f == 'X' && first == 1) return make_family("X1", {second});
  throw std::invalid_argument("unknown " + context);
}

}  // namespace

Diagram parse_diagram_name(std::string_view name) {
  Diagram out;
  std::size_t start = 0;
  while (start <= name.size()) {
    const auto plus = name.find('+', start);
    std::string_view term = trim(name.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    const int copies = digits == 0 ? 1 : parse_int(term.substr(0, digits), "diagram name");
    out = disjoint_union(out, repeat(parse_single_name(trim(term.substr(digits))), copies));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const VertexId offset = a.max_id() + 1 - [&] {
    VertexId m = b.vertices().front().id;
    for (const auto& v : b.vertices()) m = std::min(m, v.id);
    return m;
  }();
  Diagram out = a;
  for (Vertex v : b.vertices()) {
    v.id += offset;
    if (v.parent) *v.parent += offset;
    if (v.remote) *v.remote += offset;
    out.add(v);
  }
  return out;
}

Diagram repeat(const Diagram& d, int copies) {
  Diagram out;
  for (int n = 0; n < copies; ++n) out = disjoint_union(out, d);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Index-based view of a well-formed forest.
struct Forest {
  std::vector<int> weight;
  std::vector<int> parent;         // -1 for roots
  std::vector<int> remote_levels;  // 0 for free vertices, else steps up to the target
  std::vector<std::vector<int>> kids;
  std::vector<int> roots;

  explicit Forest(const Diagram& d) {
    const auto n = d.size();
    std::unordered_map<VertexId, int> index;
    for (std::size_t i = 0; i < n; ++i) index[d.vertices()[i].id] = static_cast<int>(i);
    weight.resize(n);
    parent.assign(n, -1);
    remote_levels.assign(n, 0);
    kids.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex& v = d.vertices()[i];
      weight[i] = v.weight;
      if (v.parent) {
        parent[i] = index.at(*v.parent);
        kids[static_cast<std::size_t>(parent[i])].push_back(static_cast<int>(i));
      } else {
        roots.push_back(static_cast<int>(i));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex& v = d.vertices()[i];
      if (!v.remote) continue;
      const int target = index.at(*v.remote);
      int steps = 0;
      int cur = static_cast<int>(i);
      while (cur != -1 && cur != target) {
        cur = parent[static_cast<std::size_t>(cur)];
        ++steps;
      }
      if (cur == -1) throw std::invalid_argument("remote target is not a predecessor");
      remote_levels[i] = steps;
    }
  }
};

struct KeyedChild {
  int weight;
  int satellite;
  std::string key;
  auto operator<=>(const KeyedChild&) const = default;
};

std::string subtree_key(const Forest& f, int v) {
  std::vector<KeyedChild> children;
  for (int c : f.kids[static_cast<std::size_t>(v)])
    children.push_back({f.weight[static_cast<std::size_t>(c)], f.remote_levels[static_cast<std::size_t>(c)],
                        subtree_key(f, c)});
  std::sort(children.begin(), children.end());
  std::string out = std::to_string(f.weight[static_cast<std::size_t>(v)]);
  if (f.remote_levels[static_cast<std::size_t>(v)] > 0)
    out += "^" + std::to_string(f.remote_levels[static_cast<std::size_t>(v)]);
  if (!children.empty()) {
    out += "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ",";
      out += children[i].key;
    }
    out += ")";
  }
  return out;
}

}  // namespace

std::string canonical_form(const Diagram& d) {
  const Forest f(d);
  std::vector<KeyedChild> comps;
  for (int r : f.roots) comps.push_back({f.weight[static_cast<std::size_t>(r)], 0, subtree_key(f, r)});
  std::sort(comps.begin(), comps.end());
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += " + ";
    out += comps[i].key;
  }
  return out.empty() ? "()" : out;
}

bool isomorphic(const Diagram& a, const Diagram& b) { return canonical_form(a) == canonical_form(b); }

std::vector<Diagram> components(const Diagram& d) {
  std::vector<Diagram> out;
  for (VertexId root : d.roots()) {
    Diagram comp;
    for (const auto& v : d.vertices()) {
      if (v.id == root) {
        comp.add(v);
        continue;
      }
      const auto anc = d.ancestors(v.id);
      if (!anc.empty() && anc.back() == root) comp.add(v);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Identification

namespace {

constexpr int kIdentifyCodMax = 24;

const std::map<std::string, std::pair<int, std::string>>& named_catalog() {
  static const auto catalog = [] {
    std::map<std::string, std::pair<int, std::string>> out;
    auto add = [&out](const Diagram& d, const std::string& name) {
      const int cod = characters(d).cod;
      if (cod <= kIdentifyCodMax) out.emplace(canonical_form(d), std::pair{cod, name});
    };
    for (int k = 1; k <= kIdentifyCodMax; ++k) add(make_family("A", {k}), "A" + std::to_string(k));
    for (int k = 4; k <= kIdentifyCodMax; ++k) add(make_family("D", {k}), "D" + std::to_string(k));
    for (int l = 1; 1 + 5 * l <= kIdentifyCodMax; ++l)
      for (int j = 0; j <= 2; ++j) add(make_family("E", {6 * l + j}), "E" + std::to_string(6 * l + j));
    for (int l = 2; 5 * l - 1 <= kIdentifyCodMax; ++l)
      for (int k = 0; k <= kIdentifyCodMax; ++k)
        add(make_family("J", {l, k}), "J" + std::to_string(l) + "," + std::to_string(k));
    for (int k = 0; k <= 2; ++k) add(make_family("X1", {k}), "X1," + std::to_string(k));
    add(make_family("Z11", {}), "Z11");
    add(make_family("Y11", {}), "Y1,1");
    return out;
  }();
  return catalog;
}

}  // namespace

std::optional<std::string> identify(const Diagram& d) {
  if (d.empty()) return std::string("empty");
  // (cod, name) -> multiplicity, largest first
  std::map<std::pair<int, std::string>, int, std::greater<>> counts;
  for (const auto& comp : components(d)) {
    const auto it = named_catalog().find(canonical_form(comp));
    if (it == named_catalog().end()) return std::nullopt;
    ++counts[it->second];
  }
  std::string out;
  for (const auto& [key, n] : counts) {
    if (!out.empty()) out += " + ";
    if (n > 1) out += std::to_string(n);
    out += key.second;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Checks the constraints that survive passing to a predecessor-closed part of
// a valid diagram, for the newly added vertex `v`.
bool admissible_extension(const Diagram& d, const Vertex& v) {
  const Vertex& p = d.at(*v.parent);
  if (v.weight > p.weight) return false;
  if (v.weight == 1 && !v.remote && p.weight < 2) return false;
  int kids = 0;
  int sats = 0;
  std::set<VertexId> targets;
  for (const auto& w : d.vertices()) {
    if (w.parent != p.id) continue;
    ++kids;
    if (w.remote) {
      ++sats;
      targets.insert(*w.remote);
    }
  }
  if (kids > p.weight || sats > 2 || static_cast<int>(targets.size()) != sats) return false;
  auto inequality_holds = [&d](const Vertex& t) {
    int sum = 0;
    for (const auto& w : d.vertices())
      if (w.parent == t.id || w.remote == t.id) sum += w.weight;
    return sum <= t.weight;
  };
  if (!inequality_holds(p)) return false;
  if (v.remote && !inequality_holds(d.at(*v.remote))) return false;
  return true;
}

}  // namespace

std::vector<Diagram> enumerate_one_root(int cod_max) {
  if (cod_max < 1 || cod_max > 10)
    throw std::invalid_argument("enumerate_one_root: cod_max must be between 1 and 10");
  std::vector<Diagram> frontier;
  std::unordered_set<std::string> seen;
  // cod >= C(m_R + 1, 2) - 2 bounds the root weight
  for (int m = 1; m * (m + 1) / 2 - 2 <= cod_max; ++m) {
    Diagram d;
    d.add(m);
    seen.insert(canonical_form(d));
    frontier.push_back(std::move(d));
  }
  std::vector<Diagram> found;
  while (!frontier.empty()) {
    std::vector<Diagram> next;
    for (const Diagram& d : frontier) {
      if (validate(d).ok()) found.push_back(d);
      for (const auto& p : d.vertices()) {
        std::vector<std::optional<VertexId>> remotes{std::nullopt};
        if (p.parent) remotes.push_back(*p.parent);
        if (p.remote) remotes.push_back(*p.remote);
        for (int w = 1; w <= p.weight; ++w) {
          for (const auto& remote : remotes) {
            Diagram e = d;
            const VertexId id = e.add(w, p.id, remote);
            if (!admissible_extension(e, e.at(id))) continue;
            if (characters(e).cod > cod_max) continue;
            if (seen.insert(canonical_form(e)).second) next.push_back(std::move(e));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const Diagram& a, const Diagram& b) {
    return std::pair{characters(a).cod, canonical_form(a)} < std::pair{characters(b).cod, canonical_form(b)};
  });
  return found;
}

// ---------------------------------------------------------------------------
// Subdiagrams

namespace {

class Embedder {
 public:
  Embedder(const Diagram& sub, const Diagram& sup) : a_(sub), b_(sup) {}

  bool embeds() {
    std::vector<int> sup_roots = b_.roots;
    return match(a_.roots, sup_roots);
  }

 private:
  bool vertex(int u, int x) {
    const auto key = std::pair{u, x};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = a_.weight[static_cast<std::size_t>(u)] <= b_.weight[static_cast<std::size_t>(x)] &&
              a_.remote_levels[static_cast<std::size_t>(u)] == b_.remote_levels[static_cast<std::size_t>(x)] &&
              match(a_.kids[static_cast<std::size_t>(u)], b_.kids[static_cast<std::size_t>(x)]);
    memo_[key] = ok;
    return ok;
  }

  // Injective assignment of `from` (sub vertices) into `to` (sup vertices).
  bool match(const std::vector<int>& from, const std::vector<int>& to) {
    if (from.size() > to.size()) return false;
    std::vector<bool> used(to.size(), false);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
      if (i == from.size()) return true;
      for (std::size_t j = 0; j < to.size(); ++j) {
        if (used[j] || !vertex(from[i], to[j])) continue;
        used[j] = true;
        if (go(i + 1)) return true;
        used[j] = false;
      }
      return false;
    };
    return go(0);
  }

  Forest a_;
  Forest b_;
  std::map<std::pair<int, int>, bool> memo_;
};

// Every valid subdiagram of a one-root diagram, keyed by canonical form.
std::map<std::string, Diagram> component_subdiagrams(const Diagram& comp) {
  // parents before children
  std::vector<const Vertex*> order;
  std::vector<VertexId> stack = comp.roots();
  while (!stack.empty()) {
    const VertexId id = stack.back();
    stack.pop_back();
    order.push_back(&comp.at(id));
    for (VertexId c : comp.children(id)) stack.push_back(c);
  }
  std::map<std::string, Diagram> out;
  std::map<VertexId, int> chosen;  // 0 = excluded
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) {
      Diagram d;
      for (const Vertex* v : order) {
        const int w = chosen[v->id];
        if (w > 0) d.add(Vertex{v->id, w, v->parent, v->remote});
      }
      if (validate(d).ok()) out.emplace(canonical_form(d), std::move(d));
      return;
    }
    const Vertex& v = *order[i];
    const bool parent_kept = !v.parent || chosen[*v.parent] > 0;
    chosen[v.id] = 0;
    go(i + 1);
    if (!parent_kept) return;
    for (int w = 1; w <= v.weight; ++w) {
      chosen[v.id] = w;
      go(i + 1);
    }
    chosen[v.id] = 0;
  };
  go(0);
  return out;
}

}  // namespace

bool is_subdiagram(const Diagram& sub, const Diagram& sup) { return Embedder(sub, sup).embeds(); }

std::vector<Diagram> subdiagrams(const Diagram& d) {
  std::map<std::string, Diagram> acc{{canonical_form(Diagram()), Diagram()}};
  for (const auto& comp : components(d)) {
    std::map<std::string, Diagram> next;
    for (const auto& [k1, partial] : acc)
      for (const auto& [k2, piece] : component_subdiagrams(comp)) {
        Diagram u = disjoint_union(partial, piece);
        next.emplace(canonical_form(u), std::move(u));
      }
    acc = std::move(next);
  }
  std::vector<Diagram> out;
  for (auto& [k, v] : acc) out.push_back(std::move(v));
  return out;
}

std::optional<Diagram> find_reduction_subdiagram(const Diagram& d, int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("find_reduction_subdiagram: r must be between 1 and 8");
  if (!validate(d).ok()) throw std::invalid_argument("find_reduction_subdiagram: diagram is not valid");
  if (characters(d).cod < r + 1) throw std::invalid_argument("find_reduction_subdiagram: needs cod >= r + 1");
  // Per component, one witness for each attainable (cod, deg) with deg <= 3r.
  using Options = std::map<std::pair<int, int>, Diagram>;
  Options acc{{{0, 0}, Diagram()}};
  for (const auto& comp : components(d)) {
    Options next;
    for (const auto& [k2, piece] : component_subdiagrams(comp)) {
      const CharacterSet c = characters(piece);
      for (const auto& [key, partial] : acc) {
        const std::pair<int, int> sum{key.first + c.cod, key.second + c.deg};
        if (sum.second > 3 * r) continue;
        if (!next.count(sum)) next.emplace(sum, disjoint_union(partial, piece));
      }
    }
    acc = std::move(next);
  }
  for (const auto& [key, witness] : acc)
    if (key.first >= r) return witness;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

std::string to_text(const Diagram& d) {
  std::ostringstream out;
  out << "# id parent remote weight\n";
  auto field = [](const std::optional<VertexId>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const auto& v : d.vertices())
    out << v.id << ' ' << field(v.parent) << ' ' << field(v.remote) << ' ' << v.weight << '\n';
  return out.str();
}

Diagram parse_diagram_text(std::string_view text) {
  Diagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string context = "diagram line " + std::to_string(line_no);
    if (tok.size() != 4) throw std::invalid_argument(context + ": expected 'id parent remote weight'");
    auto optional_id = [&](const std::string& t) -> std::optional<VertexId> {
      if (t == "-") return std::nullopt;
      return parse_int(t, context);
    };
    d.add(Vertex{parse_int(tok[0], context), parse_int(tok[3], context), optional_id(tok[1]), optional_id(tok[2])});
  }
  return d;
}

}  // namespace nodepoly

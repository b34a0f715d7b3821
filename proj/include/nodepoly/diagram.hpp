#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nodepoly {

using VertexId = int;

struct Vertex {
  VertexId id = 0;
  int weight = 1;
  std::optional<VertexId> parent;  // absent for a root
  std::optional<VertexId> remote;  // remote predecessor this vertex is a satellite of

  bool operator==(const Vertex&) const = default;
};

/// A weighted forest with a proximity relation: a vertex is proximate to
/// its parent and to its remote target. Vertex order carries no meaning.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }

  /// Appends a vertex with the next unused id and returns that id.
  VertexId add(int weight, std::optional<VertexId> parent = std::nullopt,
               std::optional<VertexId> remote = std::nullopt);
  void add(const Vertex& v) { vertices_.push_back(v); }

  const Vertex* find(VertexId id) const;
  const Vertex& at(VertexId id) const;
  std::vector<VertexId> roots() const;
  std::vector<VertexId> children(VertexId id) const;
  /// Vertices W with W proximate to id (children and satellites of id).
  std::vector<VertexId> proximate_to(VertexId id) const;
  /// Proper predecessors of id, nearest first.
  std::vector<VertexId> ancestors(VertexId id) const;
  VertexId max_id() const;

 private:
  std::vector<Vertex> vertices_;
};

enum class Law { kProximity, kProximityInequality, kSuccession, kMinimality };

std::string_view law_name(Law law);

struct Violation {
  Law law;
  std::vector<VertexId> vertices;
  std::string message;
};

struct ValidationReport {
  std::vector<std::string> structural_errors;  // malformed forest
  std::vector<Violation> violations;           // law violations on a well-formed forest

  bool well_formed() const { return structural_errors.empty(); }
  bool ok() const { return structural_errors.empty() && violations.empty(); }
  bool violates(Law law) const;
  std::string to_string() const;
};

ValidationReport validate(const Diagram& d);

struct CharacterSet {
  int frs = 0;
  int rts = 0;
  int dim = 0;
  int deg = 0;
  int cod = 0;
  int delta = 0;
  int r = 0;
  int mu = 0;

  bool operator==(const CharacterSet&) const = default;
  CharacterSet& operator+=(const CharacterSet& o);
  friend CharacterSet operator+(CharacterSet a, const CharacterSet& b) { return a += b; }
};

/// Requires a well-formed forest; laws are not rechecked.
CharacterSet characters(const Diagram& d);

/// Families: "A" {k>=1}, "D" {k>=4}, "E" {6l+j, l>=1, j in 0..2}, "J" {l>=2, k>=0},
/// "X1" {k in 0..2}, "Z11" {}, "Y11" {}. Throws std::invalid_argument otherwise.
Diagram make_family(std::string_view family, const std::vector<int>& params);

/// Parses names such as "A3", "D10", "E7", "J2,0", "X1,2", "Z11", "Y1,1",
/// and sums like "D4+2A1".
Diagram parse_diagram_name(std::string_view name);

/// Relabels the second operand's ids so they do not collide.
Diagram disjoint_union(const Diagram& a, const Diagram& b);
Diagram repeat(const Diagram& d, int copies);

/// Isomorphism-invariant encoding: equal iff isomorphic as weighted proximity forests.
std::string canonical_form(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

/// Connected components, each with its original ids.
std::vector<Diagram> components(const Diagram& d);

/// Name of a diagram whose components are all in the named families with
/// cod <= 24, e.g. "D4 + 2A1"; nullopt if some component is not recognized.
std::optional<std::string> identify(const Diagram& d);

/// All minimal one-root diagrams with cod <= cod_max (1 <= cod_max <= 10),
/// sorted by (cod, canonical form).
std::vector<Diagram> enumerate_one_root(int cod_max);

/// True iff sub is obtained from sup by keeping a predecessor-closed set of
/// vertices, possibly lowering weights, with the induced relations.
bool is_subdiagram(const Diagram& sub, const Diagram& sup);

/// All valid subdiagrams (including the empty one), up to isomorphism.
std::vector<Diagram> subdiagrams(const Diagram& d);

/// A valid subdiagram with cod >= r and deg <= 3r, found by exhaustive search.
/// Requires a valid d with cod(d) >= r + 1 and 1 <= r <= 8.
std::optional<Diagram> find_reduction_subdiagram(const Diagram& d, int r);

/// Text format: one vertex per line, "id parent remote weight", '-' for absent
/// fields, '#' starts a comment.
std::string to_text(const Diagram& d);
Diagram parse_diagram_text(std::string_view text);

}  // namespace nodepoly

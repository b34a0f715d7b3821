#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nodepoly/diagram.hpp"

using namespace nodepoly;

namespace {

Diagram named(const char* name) { return parse_diagram_name(name); }

struct Row {
  int cod, deg, dim, r, delta, mu;
};

void check_row(const Diagram& d, const Row& row) {
  INFO(to_text(d));
  REQUIRE(validate(d).ok());
  const CharacterSet c = characters(d);
  CHECK(c.cod == row.cod);
  CHECK(c.deg == row.deg);
  CHECK(c.dim == row.dim);
  CHECK(c.r == row.r);
  CHECK(c.delta == row.delta);
  CHECK(c.mu == row.mu);
}

bool is_successor(const Diagram& d, VertexId v, VertexId s) {
  if (v == s) return true;
  const auto anc = d.ancestors(v);
  return std::find(anc.begin(), anc.end(), s) != anc.end();
}

// Structural statement about weights along successions in a one-root diagram.
void check_weight_monotonicity(const Diagram& d) {
  const VertexId root = d.roots().at(0);
  const int m_root = d.at(root).weight;
  for (const auto& s : d.vertices()) {
    CHECK(m_root >= s.weight);
    for (const auto& v : d.vertices()) {
      if (!is_successor(d, v.id, s.id)) continue;
      CHECK(s.weight >= v.weight);
      if (s.weight != v.weight) continue;
      for (const auto& w : d.vertices()) {
        if (!is_successor(d, w.id, s.id)) continue;
        const bool after = is_successor(d, w.id, v.id);
        const bool before = is_successor(d, v.id, w.id);
        CHECK((after || before));
        if (before) {
          CHECK(w.weight == v.weight);
          CHECK(v.remote != w.id);
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("validate: examples") {
  Diagram a1;
  a1.add(2);
  CHECK(validate(a1).ok());

  Diagram lone;
  lone.add(1);
  const auto rep = validate(lone);
  CHECK(rep.well_formed());
  CHECK(rep.violates(Law::kMinimality));

  Diagram heavy;
  const VertexId r = heavy.add(2);
  heavy.add(2, r);
  heavy.add(2, r);
  const auto rep2 = validate(heavy);
  CHECK(rep2.violates(Law::kProximityInequality));
}

TEST_CASE("validate: structural errors are separate from law violations") {
  Diagram dangling({Vertex{0, 2, std::nullopt, std::nullopt}, Vertex{1, 1, 7, std::nullopt}});
  CHECK_FALSE(validate(dangling).well_formed());
  CHECK(validate(dangling).violations.empty());

  Diagram cycle({Vertex{0, 2, 1, std::nullopt}, Vertex{1, 2, 0, std::nullopt}});
  CHECK_FALSE(validate(cycle).well_formed());

  Diagram dup({Vertex{0, 2, std::nullopt, std::nullopt}, Vertex{0, 2, std::nullopt, std::nullopt}});
  CHECK_FALSE(validate(dup).well_formed());

  Diagram zero({Vertex{0, 0, std::nullopt, std::nullopt}});
  CHECK_FALSE(validate(zero).well_formed());
}

TEST_CASE("validate: proximity law") {
  // satellite of its own parent
  Diagram d;
  const VertexId r = d.add(2);
  const VertexId s = d.add(1, r, r);
  (void)s;
  CHECK(validate(d).violates(Law::kProximity));

  // a vertex between satellite and target that is not proximate to the target
  Diagram e;
  const VertexId t = e.add(4);
  const VertexId a = e.add(2, t);
  const VertexId b = e.add(2, a);
  e.add(1, b, t);
  CHECK(validate(e).violates(Law::kProximity));
}

TEST_CASE("validate: the weight-4, weight-2, two satellites configuration violates succession") {
  Diagram d;
  const VertexId root = d.add(4);
  const VertexId s = d.add(2, root);
  d.add(1, s, root);
  d.add(1, s, root);
  const auto rep = validate(d);
  CHECK(rep.violates(Law::kSuccession));
  CHECK_FALSE(rep.violates(Law::kProximityInequality));
  CHECK(characters(d).cod == 12);
}

TEST_CASE("characters: examples") {
  const CharacterSet a1 = characters(named("A1"));
  CHECK(a1 == CharacterSet{1, 1, 2, 3, 1, 1, 2, 1});
  const CharacterSet d6 = characters(named("D6"));
  CHECK(d6.dim == 3);
  CHECK(d6.deg == 9);
  CHECK(d6.cod == 6);
  CHECK(d6.r == 3);
  CHECK(d6.delta == 4);
  CHECK(d6.mu == 6);
  const CharacterSet e7 = characters(named("E7"));
  CHECK(e7.dim == 3);
  CHECK(e7.deg == 10);
  CHECK(e7.cod == 7);
  CHECK(e7.r == 2);
  CHECK(e7.delta == 4);
  CHECK(e7.mu == 7);
  CHECK(characters(Diagram()) == CharacterSet{});
}

TEST_CASE("make_family: figure structure") {
  const Diagram a2 = make_family("A", {2});
  REQUIRE(a2.size() == 3);
  const VertexId root = a2.roots().at(0);
  CHECK(a2.at(root).weight == 2);
  for (const auto& v : a2.vertices())
    if (v.id != root) {
      CHECK(v.weight == 1);
      CHECK((v.parent == root || v.remote == root));
    }

  const Diagram e6 = make_family("E", {6});
  REQUIRE(e6.size() == 4);
  const VertexId er = e6.roots().at(0);
  CHECK(e6.at(er).weight == 3);
  CHECK(e6.proximate_to(er).size() == 3);

  const Diagram x10 = make_family("X1", {0});
  REQUIRE(x10.size() == 1);
  CHECK(x10.vertices()[0].weight == 4);

  CHECK_THROWS_AS(make_family("A", {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("D", {3}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("E", {9}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("J", {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("X1", {3}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("Q", {}), std::invalid_argument);
}

TEST_CASE("characters of the named families") {
  for (int i = 1; i <= 5; ++i) {
    check_row(make_family("A", {2 * i - 1}), {2 * i - 1, 3 * i, i + 1, 2, i, 2 * i - 1});
    check_row(make_family("A", {2 * i}), {2 * i, 3 * i + 2, i + 2, 1, i, 2 * i});
    if (i >= 2) {
      check_row(make_family("D", {2 * i}), {2 * i, 3 * i, i, 3, i + 1, 2 * i});
      check_row(make_family("D", {2 * i + 1}), {2 * i + 1, 3 * i + 2, i + 1, 2, i + 1, 2 * i + 1});
    }
  }
  for (int l = 2; l <= 2; ++l)
    for (int i = 0; i <= 5; ++i) {
      check_row(make_family("J", {l, 2 * i}), {2 * i - 1 + 5 * l, 3 * i + 6 * l, i + 1 + l, 3, i + 3 * l, 2 * i - 2 + 6 * l});
      check_row(make_family("J", {l, 2 * i + 1}),
                {2 * i + 5 * l, 3 * i + 2 + 6 * l, i + 2 + l, 2, i + 3 * l, 2 * i - 1 + 6 * l});
    }
  for (int l = 1; l <= 2; ++l) {
    check_row(make_family("E", {6 * l}), {1 + 5 * l, 3 + 6 * l, l + 2, 1, 3 * l, 6 * l});
    check_row(make_family("E", {6 * l + 1}), {2 + 5 * l, 4 + 6 * l, l + 2, 2, 1 + 3 * l, 1 + 6 * l});
    check_row(make_family("E", {6 * l + 2}), {3 + 5 * l, 5 + 6 * l, l + 2, 1, 1 + 3 * l, 2 + 6 * l});
  }
  check_row(named("X1,0"), {8, 10, 2, 4, 6, 9});
  check_row(named("X1,1"), {9, 12, 3, 3, 6, 10});
  check_row(named("X1,2"), {10, 13, 3, 4, 7, 11});
  check_row(named("Z11"), {10, 13, 3, 2, 6, 11});
  check_row(named("Y1,1"), {10, 14, 4, 2, 6, 11});
}

TEST_CASE("disjoint_union adds characters") {
  const Diagram two = disjoint_union(named("A1"), named("A1"));
  CHECK(characters(two).cod == 2);
  CHECK(characters(two).deg == 6);
  CHECK(characters(disjoint_union(named("D4"), repeat(named("A1"), 3))).cod == 7);
  CHECK(isomorphic(disjoint_union(named("E7"), Diagram()), named("E7")));
  CHECK(isomorphic(disjoint_union(Diagram(), named("E7")), named("E7")));
  CHECK(validate(disjoint_union(named("E8"), named("E8"))).ok());
}

TEST_CASE("canonical_form") {
  Diagram root_first;
  const VertexId a = root_first.add(2);
  root_first.add(2, a);
  const Diagram relabelled({Vertex{9, 2, 4, std::nullopt}, Vertex{4, 2, std::nullopt, std::nullopt}});
  CHECK(canonical_form(root_first) == canonical_form(relabelled));
  CHECK(canonical_form(named("A3")) == canonical_form(root_first));
  CHECK(canonical_form(named("A3")) != canonical_form(named("A4")));
  CHECK(canonical_form(disjoint_union(named("A1"), named("A2"))) ==
        canonical_form(disjoint_union(named("A2"), named("A1"))));
  CHECK(canonical_form(named("D5")) != canonical_form(named("A4")));
}

TEST_CASE("identify and names") {
  CHECK(identify(named("D4+2A1")) == "D4 + 2A1");
  CHECK(identify(named("J2,1")) == "J2,1");
  CHECK(identify(named("Y1,1")) == "Y1,1");
  CHECK(identify(Diagram()) == "empty");
  CHECK_THROWS_AS(named("W5"), std::invalid_argument);
}

TEST_CASE("text format round-trip") {
  const Diagram d = named("E8+A2");
  const Diagram back = parse_diagram_text(to_text(d));
  CHECK(back.vertices() == d.vertices());
  const Diagram parsed = parse_diagram_text("# D5\n0 - - 3\n1 0 - 1   # free\n\n2 1 0 1\n");
  CHECK(isomorphic(parsed, named("D5")));
  CHECK_THROWS_AS(parse_diagram_text("0 - 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_diagram_text("0 - - x"), std::invalid_argument);
}

TEST_CASE("enumerate_one_root") {
  const auto one = enumerate_one_root(1);
  REQUIRE(one.size() == 1);
  CHECK(identify(one[0]) == "A1");

  std::set<std::string> four;
  for (const auto& d : enumerate_one_root(4)) four.insert(*identify(d));
  CHECK(four == std::set<std::string>{"A1", "A2", "A3", "A4", "D4"});

  const auto all = enumerate_one_root(10);
  std::set<std::string> names;
  for (const auto& d : all) {
    CHECK(validate(d).ok());
    CHECK(d.roots().size() == 1);
    CHECK(d.at(d.roots()[0]).weight != 1);
    check_weight_monotonicity(d);
    const auto name = identify(d);
    REQUIRE(name.has_value());
    names.insert(*name);
  }
  const std::set<std::string> expected{"A1",   "A2",   "A3",   "A4",   "A5",   "A6",  "A7",  "A8",  "A9",
                                       "A10",  "D4",   "D5",   "D6",   "D7",   "D8",  "D9",  "D10", "J2,0",
                                       "J2,1", "E6",   "E7",   "E8",   "X1,0", "X1,1", "X1,2", "Z11", "Y1,1"};
  CHECK(all.size() == 27);
  CHECK(names == expected);
  CHECK(characters(named("J2,0")).cod == 9);
  CHECK_THROWS_AS(enumerate_one_root(11), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_one_root(0), std::invalid_argument);
}

TEST_CASE("inequalities on the catalog and two-component unions") {
  const auto all = enumerate_one_root(10);
  for (const auto& d : all) {
    const CharacterSet c = characters(d);
    CHECK(c.mu - 1 <= c.cod);
    CHECK(c.deg <= 3 * c.cod);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      const CharacterSet c = characters(disjoint_union(all[i], all[j]));
      if (c.cod > 10) continue;
      CHECK(c.mu - 1 <= c.cod);
      CHECK(c.deg <= 3 * c.cod);
    }
}

TEST_CASE("is_subdiagram") {
  CHECK(is_subdiagram(named("A1"), named("A2")));
  CHECK_FALSE(is_subdiagram(named("A2"), named("A3")));
  for (int i = 2; i <= 4; ++i) {
    CHECK(is_subdiagram(make_family("A", {2 * i - 1}), make_family("A", {2 * i})));
    CHECK(is_subdiagram(make_family("A", {2 * i - 1}), make_family("A", {2 * i + 1})));
    CHECK_FALSE(is_subdiagram(make_family("A", {2 * i}), make_family("A", {2 * i + 1})));
    CHECK(is_subdiagram(make_family("D", {2 * i}), make_family("D", {2 * i + 1})));
    CHECK(is_subdiagram(make_family("D", {2 * i}), make_family("D", {2 * i + 2})));
    CHECK_FALSE(is_subdiagram(make_family("D", {2 * i + 1}), make_family("D", {2 * i + 2})));
  }
  CHECK(is_subdiagram(named("E7"), named("E8")));
  CHECK(is_subdiagram(named("A3"), named("E7")));
  CHECK(is_subdiagram(named("A2"), named("E6")));
  CHECK(is_subdiagram(named("2A1"), named("D4+A3")));
  CHECK_FALSE(is_subdiagram(named("2A1"), named("A3")));
}

TEST_CASE("subdiagrams agree with is_subdiagram") {
  for (const char* name : {"E8", "D7", "A6", "Y1,1", "J2,1", "X1,2+A2"}) {
    const Diagram sup = named(name);
    for (const auto& sub : subdiagrams(sup)) {
      CHECK(validate(sub).ok());
      CHECK(is_subdiagram(sub, sup));
    }
  }
}

TEST_CASE("find_reduction_subdiagram") {
  auto check_witness = [](const char* name, int r) {
    const auto w = find_reduction_subdiagram(named(name), r);
    REQUIRE(w.has_value());
    const CharacterSet c = characters(*w);
    CHECK(validate(*w).ok());
    CHECK(c.cod >= r);
    CHECK(c.deg <= 3 * r);
    CHECK(is_subdiagram(*w, named(name)));
    return *w;
  };
  check_witness("A9", 8);
  check_witness("D4+2A1", 5);
  CHECK(identify(check_witness("2A1", 1)) == "A1");
  CHECK_THROWS_AS(find_reduction_subdiagram(named("A1"), 1), std::invalid_argument);
}

#include <doctest.h>

#include "superexp/harness.hpp"
#include "superexp/instances.hpp"

using namespace superexp;

TEST_CASE("smallest envelope parses to a one-cell table") {
  auto inst = parse_instance(R"({"format":"superexp/1","problem":"kk_clique","k":1,"edges":[]})");
  const auto& t = std::get<TableGraph>(inst);
  CHECK(t.k == 1);
  CHECK(t.flavor == TableFlavor::Clique);
  CHECK(t.edges.empty());
}

TEST_CASE("DIMACS is accepted for sat3") {
  auto inst = parse_instance("c comment\np cnf 1 1\n1 0\n");
  const auto& f = std::get<CnfFormula>(inst);
  CHECK(f.num_vars == 1);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::vector<int>{1});
}

TEST_CASE("bpis edge inside I1 is an invariant error") {
  std::string text =
      R"({"format":"superexp/1","problem":"bpis","k":1,"edges":[[[1,1],[1,2]]]})";
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("InvariantError"), Error);
}

TEST_CASE("out-of-range cell is a range error") {
  std::string text = R"({"format":"superexp/1","problem":"kk_clique","k":1,"edges":[[[1,1],[1,2]]]})";
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("RangeError"), Error);
}

TEST_CASE("malformed json is a syntax error") {
  CHECK_THROWS_WITH_AS(parse_instance("{problem:"), doctest::Contains("SyntaxError"), Error);
}

TEST_CASE("serialization is canonical and edge-order independent") {
  TableGraph a, b;
  a.k = b.k = 2;
  a.flavor = b.flavor = TableFlavor::Clique;
  a.add_edge({1, 1}, {2, 2});
  a.add_edge({2, 1}, {1, 2});
  b.add_edge({1, 2}, {2, 1});  // same edges, other order and orientation
  b.add_edge({2, 2}, {1, 1});
  CHECK(serialize_instance(a) == serialize_instance(b));
}

TEST_CASE("duplicate hitting sets are preserved in canonical order") {
  HittingSetInstance h;
  h.k = 2;
  h.sets = {{{2, 1}, {1, 1}}, {{1, 1}, {2, 1}}};
  ProblemInstance inst = h;
  auto text = serialize_instance(inst);
  auto round = parse_instance(text);
  const auto& parsed = std::get<HittingSetInstance>(round);
  REQUIRE(parsed.sets.size() == 2);
  CHECK(parsed.sets[0] == parsed.sets[1]);
  CHECK(parsed.sets[0] == std::vector<Cell>{{1, 1}, {2, 1}});
}

TEST_CASE("validate reports a vertex cover miss") {
  ChromaticInstance c;
  c.graph.n = 3;
  c.graph.add_edge(1, 2);
  c.graph.add_edge(2, 3);
  c.vertex_cover = {1};
  c.ell = 2;
  auto violations = validate_instance(ProblemInstance{c});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("vertex_cover misses edge (2,3)") != std::string::npos);
}

TEST_CASE("validate reports shared demand terminals") {
  DisjointPathsInstance d;
  d.n = 4;
  d.add_link(1, 2);
  d.add_link(3, 4);
  d.demands = {{1, 2}, {1, 4}};
  auto violations = validate_instance(ProblemInstance{d});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("terminals not distinct") != std::string::npos);
}

TEST_CASE("disconnected distortion inputs are rejected at parse") {
  std::string text =
      R"({"format":"superexp/1","problem":"distortion","num_vertices":3,"d":2,"edges":[[1,2]]})";
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("disconnected"), Error);
}

TEST_CASE("valid small instances have no violations") {
  TableGraph t;
  t.k = 2;
  t.add_edge({1, 1}, {2, 2});
  CHECK(validate_instance(ProblemInstance{t}).empty());
}

TEST_CASE("round trip is the identity across every problem") {
  std::vector<ProblemInstance> samples;
  GenParams p;
  p.k = 2;
  p.m = 3;
  p.n = 4;
  p.t = 3;
  p.length = 3;
  p.sigma = 3;
  p.d = 2;
  p.ell = 2;
  p.demands = 2;
  for (Problem prob :
       {Problem::Sat3, Problem::ThreeColoring, Problem::KkClique, Problem::KkPermClique,
        Problem::KkPermIs, Problem::Bpis, Problem::HittingSet, Problem::ClosestString,
        Problem::ConstrainedPermutation, Problem::Distortion, Problem::DisjointPaths,
        Problem::DirectedDisjointPaths, Problem::Chromatic})
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      samples.push_back(gen_random(prob, p, seed));

  for (const auto& inst : samples) {
    auto text = serialize_instance(inst);
    auto round = parse_instance(text);
    CHECK(round == inst);
    CHECK(serialize_instance(round) == text);
    CHECK(validate_instance(round).empty());
  }
}

TEST_CASE("witness serialization round trips") {
  std::vector<Witness> samples = {
      RowSelectionWitness{{1, 2, 1}},
      PermutationWitness{{2, 1}},
      CenterStringWitness{{1, 3, 2}},
      LineEmbeddingWitness{{0, 2, 5}},
      PathSystemWitness{{{1, 2}, {3, 4, 5}}},
      ColorAssignmentWitness{{1, 2, 2}},
      AssignmentWitness{{true, false}},
      ThreeColoringWitness{{1, 2, 3}},
  };
  for (const auto& w : samples) {
    auto text = serialize_witness(w);
    CHECK(parse_witness(text) == w);
    CHECK(serialize_witness(parse_witness(text)) == text);
  }
}

TEST_CASE("cp element labels must be the structured names") {
  ConstrainedPermutationInstance c;
  c.kprime = 24;
  c.sets = {{1, 2}};
  std::map<int, std::string> labels;
  for (int e = 1; e <= 24; ++e) labels[e] = "x" + std::to_string(e);
  c.element_labels = labels;
  auto violations = validate_instance(ProblemInstance{c});
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("bijection") != std::string::npos);
}

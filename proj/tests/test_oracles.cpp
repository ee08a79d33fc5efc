#include <doctest.h>

#include "brute_force.hpp"
#include "superexp/harness.hpp"
#include "superexp/oracles.hpp"

using namespace superexp;

namespace {

TableGraph one_cell_clique() {
  TableGraph t;
  t.k = 1;
  return t;
}

DistortionInstance star_k13(int d) {
  DistortionInstance inst;
  inst.graph.n = 4;
  inst.graph.add_edge(1, 2);
  inst.graph.add_edge(1, 3);
  inst.graph.add_edge(1, 4);
  inst.d = d;
  return inst;
}

}  // namespace

TEST_CASE("single cell is a 1-clique") {
  CHECK(verify_witness(ProblemInstance{one_cell_clique()}, RowSelectionWitness{{1}}));
  auto r = solve_exhaustive(ProblemInstance{one_cell_clique()});
  REQUIRE(r.outcome == Outcome::Yes);
  CHECK(*r.witness == Witness{RowSelectionWitness{{1}}});
}

TEST_CASE("zero-distance center string verifies") {
  ClosestStringInstance c;
  c.sigma = 3;
  c.length = 1;
  c.d = 0;
  c.strings = {{1}, {1}};
  CHECK(verify_witness(ProblemInstance{c}, CenterStringWitness{{1}}));
}

TEST_CASE("K_{1,3} has no distortion-2 embedding from any ordering") {
  auto inst = star_k13(2);
  CHECK_FALSE(brute::distortion_yes(inst));
  // A specific bad ordering: leaf, center, leaf, leaf stretches one edge to 3.
  CHECK_FALSE(verify_witness(ProblemInstance{inst}, LineEmbeddingWitness{{1, 0, 2, 4}}));
}

TEST_CASE("bpis k=1 with the only cross edge is a no-instance") {
  TableGraph t;
  t.k = 1;
  t.flavor = TableFlavor::BipartitePermutationIndependentSet;
  t.add_edge({1, 1}, {2, 2});
  auto r = solve_exhaustive(ProblemInstance{t});
  CHECK(r.outcome == Outcome::No);
  CHECK_FALSE(brute::table_yes(t));
}

TEST_CASE("K4 is not 3-chromatic") {
  ChromaticInstance c;
  c.graph.n = 4;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) c.graph.add_edge(u, v);
  c.vertex_cover = {1, 2, 3};
  c.ell = 3;
  CHECK(solve_exhaustive(ProblemInstance{c}).outcome == Outcome::No);
}

TEST_CASE("closest-string branching on the radius-1 pair") {
  ClosestStringInstance c;
  c.sigma = 2;
  c.length = 2;
  c.d = 1;
  c.strings = {{1, 2}, {2, 1}};
  auto r = solve_closest_string_branching(c);
  REQUIRE(r.outcome == Outcome::Yes);
  CHECK(verify_witness(ProblemInstance{c}, *r.witness));
}

TEST_CASE("closest-string branching rejects distance-0 on distinct strings") {
  ClosestStringInstance c;
  c.sigma = 2;
  c.length = 2;
  c.d = 0;
  c.strings = {{1, 1}, {2, 2}};
  CHECK(solve_closest_string_branching(c).outcome == Outcome::No);
}

TEST_CASE("branching agrees with enumeration on 300 random instances") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(mix(42, seed));
    p.length = 1 + static_cast<int>(rng.below(6));
    p.sigma = 1 + static_cast<int>(rng.below(5));
    p.d = static_cast<int>(rng.below(4));
    p.t = 1 + static_cast<int>(rng.below(6));
    auto inst =
        std::get<ClosestStringInstance>(gen_random(Problem::ClosestString, p, mix(43, seed)));
    auto a = solve_exhaustive(ProblemInstance{inst});
    auto b = solve_closest_string_branching(inst);
    REQUIRE(a.outcome != Outcome::BudgetExceeded);
    REQUIRE(b.outcome != Outcome::BudgetExceeded);
    CHECK(a.outcome == b.outcome);
    if (b.outcome == Outcome::Yes) CHECK(verify_witness(ProblemInstance{inst}, *b.witness));
  }
}

TEST_CASE("path on three vertices embeds with distortion 1") {
  DistortionInstance inst;
  inst.graph.n = 3;
  inst.graph.add_edge(1, 2);
  inst.graph.add_edge(2, 3);
  inst.d = 1;
  auto r = solve_distortion_pushing(inst);
  REQUIRE(r.outcome == Outcome::Yes);
  CHECK(*r.witness == Witness{LineEmbeddingWitness{{0, 1, 2}}});
}

TEST_CASE("K_{1,3} needs distortion 3") {
  CHECK(solve_distortion_pushing(star_k13(2)).outcome == Outcome::No);
  auto r = solve_distortion_pushing(star_k13(3));
  REQUIRE(r.outcome == Outcome::Yes);
  CHECK(verify_witness(ProblemInstance{star_k13(3)}, *r.witness));
}

TEST_CASE("pushing solver agrees with full ordering enumeration on small graphs") {
  GenParams p;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 rng(mix(7, seed));
    p.n = 2 + static_cast<int>(rng.below(5));  // up to 6 vertices: 720 orderings
    p.p = 0.2 + 0.6 * rng.uniform01();
    p.d = 1 + static_cast<int>(rng.below(4));
    auto inst = std::get<DistortionInstance>(gen_random(Problem::Distortion, p, mix(8, seed)));
    auto r = solve_distortion_pushing(inst);
    REQUIRE(r.outcome != Outcome::BudgetExceeded);
    CHECK((r.outcome == Outcome::Yes) == brute::distortion_yes(inst));
    if (r.outcome == Outcome::Yes) CHECK(verify_witness(ProblemInstance{inst}, *r.witness));
  }
}

TEST_CASE("solvers are deterministic in outcome, witness, and node count") {
  GenParams p;
  p.k = 3;
  p.m = 3;
  p.n = 4;
  for (Problem prob : {Problem::KkClique, Problem::Bpis, Problem::HittingSet,
                       Problem::ConstrainedPermutation, Problem::Sat3, Problem::Chromatic}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = gen_random(prob, p, seed);
      auto a = solve_exhaustive(inst);
      auto b = solve_exhaustive(inst);
      CHECK(a.outcome == b.outcome);
      CHECK(a.nodes_explored == b.nodes_explored);
      CHECK(a.witness == b.witness);
    }
  }
}

TEST_CASE("every yes carries a verifying witness and every no matches full enumeration") {
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
  std::vector<Problem> probs = {Problem::Sat3,          Problem::ThreeColoring,
                                Problem::KkClique,      Problem::KkPermClique,
                                Problem::KkPermIs,      Problem::Bpis,
                                Problem::HittingSet,    Problem::ClosestString,
                                Problem::ConstrainedPermutation, Problem::Distortion,
                                Problem::DisjointPaths, Problem::DirectedDisjointPaths,
                                Problem::Chromatic};
  for (Problem prob : probs) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      auto inst = gen_random(prob, p, mix(99, seed));
      auto r = solve_exhaustive(inst);
      REQUIRE(r.outcome != Outcome::BudgetExceeded);
      if (r.outcome == Outcome::Yes) CHECK(verify_witness(inst, *r.witness));
      CHECK((r.outcome == Outcome::Yes) == brute::yes(inst));
    }
  }
}

TEST_CASE("node budget is honored") {
  TableGraph t;
  t.k = 5;
  t.flavor = TableFlavor::PermutationClique;  // edgeless: no 5-clique exists
  auto r = solve_exhaustive(ProblemInstance{t}, 10);
  CHECK(r.outcome == Outcome::BudgetExceeded);
  CHECK(r.nodes_explored >= 10);
}

TEST_CASE("witness kind mismatch throws") {
  CHECK_THROWS_WITH_AS(
      verify_witness(ProblemInstance{one_cell_clique()}, CenterStringWitness{{1}}),
      doctest::Contains("KindMismatch"), Error);
}

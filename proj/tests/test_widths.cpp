#include <doctest.h>

#include "superexp/instances.hpp"
#include "superexp/prng.hpp"
#include "superexp/widths.hpp"

using namespace superexp;

TEST_CASE("single edge decomposition has width 1") {
  PathDecomposition pd{{{1, 2}}};
  auto check = validate_path_decomposition(2, {{1, 2}}, pd);
  CHECK(check.ok);
  CHECK(check.width == 1);
}

TEST_CASE("contiguity violation is reported with the vertex") {
  PathDecomposition pd{{{1, 2}, {2}, {1, 2}}};
  auto check = validate_path_decomposition(2, {{1, 2}}, pd);
  CHECK_FALSE(check.ok);
  REQUIRE(check.violations.size() == 1);
  CHECK(check.violations[0].find("vertex 1") != std::string::npos);
}

TEST_CASE("uncovered edge and uncovered vertex are violations") {
  PathDecomposition pd{{{1}, {2}}};
  auto check = validate_path_decomposition(3, {{1, 2}}, pd);
  CHECK_FALSE(check.ok);
  CHECK(check.violations.size() == 2);  // vertex 3 missing, edge (1,2) uncovered
}

TEST_CASE("make_last_bags_distinct duplicates the shared final bag") {
  PathDecomposition pd{{{1, 2}}};
  auto out = make_last_bags_distinct(pd);
  REQUIRE(out.bags.size() == 2);
  CHECK(out.bags[0] == std::vector<int>{1, 2});
  CHECK(out.bags[1] == std::vector<int>{2});
  CHECK(out.width() == pd.width());
}

TEST_CASE("make_last_bags_distinct keeps already-distinct input unchanged") {
  PathDecomposition pd{{{1, 2}, {2, 3}}};
  CHECK(make_last_bags_distinct(pd).bags == pd.bags);
}

TEST_CASE("make_last_bags_distinct yields injective last-bag indices") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    // Random valid-ish interval structure: vertices appear on random intervals.
    int n = 2 + static_cast<int>(rng.below(5));
    int bags = 2 + static_cast<int>(rng.below(4));
    PathDecomposition pd;
    pd.bags.assign(bags, {});
    for (int v = 1; v <= n; ++v) {
      int lo = static_cast<int>(rng.below(bags));
      int hi = lo + static_cast<int>(rng.below(bags - lo));
      for (int b = lo; b <= hi; ++b) pd.bags[b].push_back(v);
    }
    auto out = make_last_bags_distinct(pd);
    auto last = last_bag_index(out, n);
    std::set<int> seen;
    for (int v = 1; v <= n; ++v) {
      CHECK(last[v] >= 0);
      CHECK(seen.insert(last[v]).second);
    }
    // Intervals stay contiguous and width does not grow.
    auto check = validate_path_decomposition(n, {}, out);
    CHECK(check.ok);
    CHECK(out.width() <= pd.width());
  }
}

TEST_CASE("pd_subdivide inserts the new vertex next to its edge") {
  PathDecomposition pd{{{1, 2}}};
  auto out = pd_subdivide(pd, {{1, 2, 3}});
  auto check = validate_path_decomposition(3, {{1, 3}, {2, 3}}, out);
  CHECK(check.ok);
  CHECK(check.width <= pd.width() + 1);
}

TEST_CASE("pd_subdivide on a triangle stays within width+1") {
  PathDecomposition pd{{{1, 2, 3}}};
  auto out = pd_subdivide(pd, {{1, 2, 4}});
  auto check = validate_path_decomposition(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}, out);
  CHECK(check.ok);
  CHECK(check.width <= 3);
}

TEST_CASE("pd_subdivide rejects edges sharing no bag") {
  PathDecomposition pd{{{1}, {2}}};
  CHECK_THROWS_WITH_AS(pd_subdivide(pd, {{1, 2, 3}}), doctest::Contains("EdgeNotInBag"), Error);
}

TEST_CASE("pd_subdivide increases width by at most one on random cases") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng.below(5));
    SimpleGraph g;
    g.n = n;
    for (int v = 2; v <= n; ++v) g.add_edge(1 + static_cast<int>(rng.below(v - 1)), v);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.bernoulli(0.3) && !g.adjacent(u, v)) g.add_edge(u, v);

    // Trivial decomposition plus random duplicated suffix bags.
    PathDecomposition pd;
    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    pd.bags.push_back(all);
    int w_before = pd.width();

    std::vector<std::tuple<int, int, int>> subs;
    int next = n;
    std::vector<std::pair<int, int>> new_edges;
    for (auto [u, v] : g.edges) {
      if (rng.bernoulli(0.5)) {
        ++next;
        subs.push_back({u, v, next});
        new_edges.push_back({u, next});
        new_edges.push_back({v, next});
      } else {
        new_edges.push_back({u, v});
      }
    }
    auto out = pd_subdivide(pd, subs);
    auto check = validate_path_decomposition(next, new_edges, out);
    CHECK(check.ok);
    CHECK(check.width <= w_before + 1);
  }
}

TEST_CASE("width caps") {
  CHECK(gadget_chain_width_cap(1) == 12);
  CHECK(gadget_chain_width_cap(2) == 19);
  CHECK(vertex_split_width_cap(3) == 10);
}

#pragma once

// Test-only ground truth: unpruned full enumeration, independent of the
// library's solver implementations. Only usable at tiny sizes.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "superexp/instances.hpp"
#include "superexp/oracles.hpp"

namespace superexp::brute {

// All selections [side]^side (or permutations), checked against verify_witness.
inline bool table_yes(const TableGraph& t) {
  int side = t.side();
  std::vector<int> rho(side, 1);
  bool perm = t.flavor != TableFlavor::Clique;
  for (;;) {
    Witness w = perm ? Witness{PermutationWitness{rho}} : Witness{RowSelectionWitness{rho}};
    if (verify_witness(ProblemInstance{t}, w)) return true;
    int i = side - 1;
    while (i >= 0 && rho[i] == side) --i;
    if (i < 0) return false;
    ++rho[i];
    for (int j = i + 1; j < side; ++j) rho[j] = 1;
  }
}

inline bool hitting_set_yes(const HittingSetInstance& h) {
  std::vector<int> rho(h.k, 1);
  for (;;) {
    if (verify_witness(ProblemInstance{h}, RowSelectionWitness{rho})) return true;
    int i = h.k - 1;
    while (i >= 0 && rho[i] == h.k) --i;
    if (i < 0) return false;
    ++rho[i];
    for (int j = i + 1; j < h.k; ++j) rho[j] = 1;
  }
}

inline bool closest_string_yes(const ClosestStringInstance& c) {
  std::vector<int> s(c.length, 1);
  for (;;) {
    if (verify_witness(ProblemInstance{c}, CenterStringWitness{s})) return true;
    int i = c.length - 1;
    while (i >= 0 && s[i] == c.sigma) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < c.length; ++j) s[j] = 1;
  }
}

inline bool cp_yes(const ConstrainedPermutationInstance& c) {
  std::vector<int> rho(c.kprime);
  std::iota(rho.begin(), rho.end(), 1);
  do {
    if (verify_witness(ProblemInstance{c}, PermutationWitness{rho})) return true;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return false;
}

inline bool three_coloring_yes(const ThreeColoringInstance& inst) {
  int n = inst.graph.n;
  std::vector<int> colors(n, 1);
  for (;;) {
    if (verify_witness(ProblemInstance{inst}, ThreeColoringWitness{colors})) return true;
    int i = n - 1;
    while (i >= 0 && colors[i] == 3) --i;
    if (i < 0) return false;
    ++colors[i];
    for (int j = i + 1; j < n; ++j) colors[j] = 1;
  }
}

inline bool chromatic_yes(const ChromaticInstance& inst) {
  int n = inst.graph.n;
  std::vector<int> colors(n, 1);
  for (;;) {
    if (verify_witness(ProblemInstance{inst}, ColorAssignmentWitness{colors})) return true;
    int i = n - 1;
    while (i >= 0 && colors[i] == inst.ell) --i;
    if (i < 0) return false;
    ++colors[i];
    for (int j = i + 1; j < n; ++j) colors[j] = 1;
  }
}

inline bool sat3_yes(const CnfFormula& f) {
  int n = f.num_vars;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<bool> values(n);
    for (int i = 0; i < n; ++i) values[i] = (mask >> i) & 1;
    if (verify_witness(ProblemInstance{f}, AssignmentWitness{values})) return true;
  }
  return false;
}

// Every left-to-right ordering of all vertices, positions from the pushing
// rule, full distortion definition checked directly.
inline bool distortion_yes(const DistortionInstance& inst) {
  int n = inst.graph.n;
  auto dist = all_pairs_distances(inst.graph);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  do {
    std::vector<long long> g(n, 0);
    for (int i = 1; i < n; ++i)
      g[order[i] - 1] = g[order[i - 1] - 1] + dist[order[i - 1] - 1][order[i] - 1];
    if (verify_witness(ProblemInstance{inst}, LineEmbeddingWitness{g})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// All combinations of simple paths per demand, no pruning beyond simplicity.
inline bool disjoint_paths_yes(const DisjointPathsInstance& inst) {
  int p = static_cast<int>(inst.demands.size());
  std::vector<std::vector<std::vector<int>>> candidate_paths(p);
  for (int i = 0; i < p; ++i) {
    auto [s, t] = inst.demands[i];
    std::vector<int> path{s};
    std::vector<bool> on(inst.n + 1, false);
    on[s] = true;
    auto extend = [&](auto&& self) -> void {
      int at = path.back();
      if (at == t) {
        candidate_paths[i].push_back(path);
        return;
      }
      for (int v = 1; v <= inst.n; ++v) {
        if (on[v] || !inst.linked(at, v)) continue;
        on[v] = true;
        path.push_back(v);
        self(self);
        path.pop_back();
        on[v] = false;
      }
    };
    extend(extend);
  }
  std::vector<int> pick(p, 0);
  auto combine = [&](auto&& self, int i) -> bool {
    if (i == p) {
      std::vector<std::vector<int>> paths;
      for (int a = 0; a < p; ++a) paths.push_back(candidate_paths[a][pick[a]]);
      return verify_witness(ProblemInstance{inst}, PathSystemWitness{paths});
    }
    for (pick[i] = 0; pick[i] < static_cast<int>(candidate_paths[i].size()); ++pick[i])
      if (self(self, i + 1)) return true;
    return false;
  };
  return combine(combine, 0);
}

inline bool yes(const ProblemInstance& inst) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CnfFormula>) return sat3_yes(v);
        else if constexpr (std::is_same_v<T, ThreeColoringInstance>) return three_coloring_yes(v);
        else if constexpr (std::is_same_v<T, TableGraph>) return table_yes(v);
        else if constexpr (std::is_same_v<T, HittingSetInstance>) return hitting_set_yes(v);
        else if constexpr (std::is_same_v<T, ClosestStringInstance>) return closest_string_yes(v);
        else if constexpr (std::is_same_v<T, ConstrainedPermutationInstance>) return cp_yes(v);
        else if constexpr (std::is_same_v<T, DistortionInstance>) return distortion_yes(v);
        else if constexpr (std::is_same_v<T, DisjointPathsInstance>) return disjoint_paths_yes(v);
        else if constexpr (std::is_same_v<T, ChromaticInstance>) return chromatic_yes(v);
      },
      inst);
}

}  // namespace superexp::brute

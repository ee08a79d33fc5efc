#include "superexp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace superexp {

std::string outcome_tag(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

struct Budget {
  std::uint64_t limit;
  std::uint64_t nodes = 0;
  bool exceeded = false;

  // One backtracking-tree node; false once the budget is exhausted.
  bool tick() {
    if (exceeded) return false;
    if (++nodes > limit) {
      exceeded = true;
      return false;
    }
    return true;
  }
};

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

bool valid_permutation(const std::vector<int>& rho, int side) {
  if (static_cast<int>(rho.size()) != side) return false;
  std::vector<bool> seen(side + 1, false);
  for (int v : rho) {
    if (v < 1 || v > side || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// ---- witness verification --------------------------------------------------

bool verify_table(const TableGraph& t, const Witness& w) {
  const std::vector<int>* rho = nullptr;
  bool need_perm = t.flavor != TableFlavor::Clique;
  if (need_perm) {
    auto* pw = std::get_if<PermutationWitness>(&w);
    if (!pw) fail("KindMismatch", "table permutation problems take a permutation witness");
    rho = &pw->rho;
    if (!valid_permutation(*rho, t.side())) return false;
  } else {
    auto* rw = std::get_if<RowSelectionWitness>(&w);
    if (!rw) fail("KindMismatch", "kk_clique takes a row_selection witness");
    rho = &rw->rho;
    if (static_cast<int>(rho->size()) != t.side()) return false;
    for (int v : *rho)
      if (v < 1 || v > t.side()) return false;
  }
  int side = t.side();
  if (t.flavor == TableFlavor::BipartitePermutationIndependentSet) {
    for (int i = 1; i <= side; ++i) {
      bool upper = i <= t.k;
      if (upper != ((*rho)[i - 1] <= t.k)) return false;  // membership in I1 u I2
    }
  }
  bool want_adjacent = t.flavor == TableFlavor::Clique || t.flavor == TableFlavor::PermutationClique;
  for (int i1 = 1; i1 <= side; ++i1)
    for (int i2 = i1 + 1; i2 <= side; ++i2) {
      bool adj = t.adjacent({i1, (*rho)[i1 - 1]}, {i2, (*rho)[i2 - 1]});
      if (want_adjacent && !adj) return false;
      if (!want_adjacent && adj) return false;
    }
  return true;
}

bool verify_hitting_set(const HittingSetInstance& h, const Witness& w) {
  auto* rw = std::get_if<RowSelectionWitness>(&w);
  if (!rw) fail("KindMismatch", "hitting_set takes a row_selection witness");
  if (static_cast<int>(rw->rho.size()) != h.k) return false;
  for (int v : rw->rho)
    if (v < 1 || v > h.k) return false;
  for (const auto& set : h.sets) {
    bool hit = false;
    for (Cell c : set)
      if (rw->rho[c.first - 1] == c.second) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool verify_closest_string(const ClosestStringInstance& inst, const Witness& w) {
  auto* cw = std::get_if<CenterStringWitness>(&w);
  if (!cw) fail("KindMismatch", "closest_string takes a center_string witness");
  if (static_cast<int>(cw->s.size()) != inst.length) return false;
  for (int ch : cw->s)
    if (ch < 1 || ch > inst.sigma) return false;
  for (const auto& s : inst.strings)
    if (hamming(cw->s, s) > inst.d) return false;
  return true;
}

bool verify_cp(const ConstrainedPermutationInstance& inst, const Witness& w) {
  auto* pw = std::get_if<PermutationWitness>(&w);
  if (!pw) fail("KindMismatch", "constrained_permutation takes a permutation witness");
  if (!valid_permutation(pw->rho, inst.kprime)) return false;
  for (const auto& set : inst.sets) {
    bool hit = false;
    for (int j = 0; j + 1 < inst.kprime && !hit; ++j) {
      int a = pw->rho[j], b = pw->rho[j + 1];
      hit = std::binary_search(set.begin(), set.end(), a) &&
            std::binary_search(set.begin(), set.end(), b);
    }
    if (!hit) return false;
  }
  return true;
}

bool verify_distortion(const DistortionInstance& inst, const Witness& w) {
  auto* lw = std::get_if<LineEmbeddingWitness>(&w);
  if (!lw) fail("KindMismatch", "distortion takes a line_embedding witness");
  int n = inst.graph.n;
  if (static_cast<int>(lw->g.size()) != n) return false;
  auto dist = all_pairs_distances(inst.graph);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      long long gap = std::llabs(lw->g[u - 1] - lw->g[v - 1]);
      if (gap < dist[u - 1][v - 1]) return false;  // non-contraction, all pairs
    }
  for (auto [u, v] : inst.graph.edges) {
    long long gap = std::llabs(lw->g[u - 1] - lw->g[v - 1]);
    if (gap > inst.d) return false;  // edge expansion bounds all pairs
  }
  return true;
}

bool verify_disjoint_paths(const DisjointPathsInstance& inst, const Witness& w) {
  auto* pw = std::get_if<PathSystemWitness>(&w);
  if (!pw) fail("KindMismatch", "disjoint_paths takes a path_system witness");
  if (pw->paths.size() != inst.demands.size()) return false;
  std::vector<bool> used(inst.n + 1, false);
  for (size_t i = 0; i < pw->paths.size(); ++i) {
    const auto& path = pw->paths[i];
    if (path.empty()) return false;
    if (path.front() != inst.demands[i].first || path.back() != inst.demands[i].second)
      return false;
    for (int v : path) {
      if (v < 1 || v > inst.n || used[v]) return false;
      used[v] = true;
    }
    for (size_t j = 0; j + 1 < path.size(); ++j)
      if (!inst.linked(path[j], path[j + 1])) return false;
  }
  return true;
}

bool verify_chromatic(const ChromaticInstance& inst, const Witness& w) {
  auto* cw = std::get_if<ColorAssignmentWitness>(&w);
  if (!cw) fail("KindMismatch", "chromatic takes a color_assignment witness");
  if (static_cast<int>(cw->colors.size()) != inst.graph.n) return false;
  for (int c : cw->colors)
    if (c < 1 || c > inst.ell) return false;
  for (auto [u, v] : inst.graph.edges)
    if (cw->colors[u - 1] == cw->colors[v - 1]) return false;
  return true;
}

bool verify_sat3(const CnfFormula& f, const Witness& w) {
  auto* aw = std::get_if<AssignmentWitness>(&w);
  if (!aw) fail("KindMismatch", "sat3 takes an assignment witness");
  if (static_cast<int>(aw->values.size()) != f.num_vars) return false;
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      bool v = aw->values[std::abs(lit) - 1];
      if ((lit > 0) == v) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool verify_three_coloring(const ThreeColoringInstance& inst, const Witness& w) {
  auto* cw = std::get_if<ThreeColoringWitness>(&w);
  if (!cw) fail("KindMismatch", "three_coloring takes a three_coloring witness");
  if (static_cast<int>(cw->colors.size()) != inst.graph.n) return false;
  for (int c : cw->colors)
    if (c < 1 || c > 3) return false;
  for (auto [u, v] : inst.graph.edges)
    if (cw->colors[u - 1] == cw->colors[v - 1]) return false;
  return true;
}

// ---- solvers -----------------------------------------------------------------

// Row-major cell choice over the table; adjacency constraints depend on flavor.
SolveResult solve_table(const TableGraph& t, Budget& budget) {
  int side = t.side();
  bool perm = t.flavor != TableFlavor::Clique;
  bool want_adjacent =
      t.flavor == TableFlavor::Clique || t.flavor == TableFlavor::PermutationClique;
  bool bpis = t.flavor == TableFlavor::BipartitePermutationIndependentSet;

  std::vector<int> rho(side + 1, 0);
  std::vector<bool> col_used(side + 1, false);
  SolveResult result;

  auto dfs = [&](auto&& self, int row) -> bool {
    if (!budget.tick()) return false;
    if (row > side) return true;
    int lo = 1, hi = side;
    if (bpis) {
      lo = row <= t.k ? 1 : t.k + 1;
      hi = row <= t.k ? t.k : side;
    }
    for (int col = lo; col <= hi; ++col) {
      if (perm && col_used[col]) continue;
      bool ok = true;
      for (int prev = 1; prev < row && ok; ++prev) {
        bool adj = t.adjacent({prev, rho[prev]}, {row, col});
        ok = (adj == want_adjacent);
      }
      if (!ok) continue;
      rho[row] = col;
      col_used[col] = true;
      if (self(self, row + 1)) return true;
      col_used[col] = false;
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = dfs(dfs, 1);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    std::vector<int> out(rho.begin() + 1, rho.end());
    if (perm)
      result.witness = PermutationWitness{out};
    else
      result.witness = RowSelectionWitness{out};
  }
  return result;
}

SolveResult solve_hitting_set(const HittingSetInstance& h, Budget& budget) {
  int m = static_cast<int>(h.sets.size());
  // max_row[x] = 0 for empty sets: checked before the first row is chosen.
  std::vector<int> max_row(m, 0);
  std::vector<std::vector<std::vector<int>>> sets_at(h.k + 1,
                                                     std::vector<std::vector<int>>(h.k + 1));
  for (int x = 0; x < m; ++x)
    for (Cell c : h.sets[x]) {
      max_row[x] = std::max(max_row[x], c.first);
      sets_at[c.first][c.second].push_back(x);
    }
  std::vector<std::vector<int>> by_max_row(h.k + 1);
  for (int x = 0; x < m; ++x) by_max_row[max_row[x]].push_back(x);

  std::vector<int> hit(m, 0), rho(h.k + 1, 0);
  SolveResult result;

  auto dfs = [&](auto&& self, int row) -> bool {
    if (!budget.tick()) return false;
    for (int x : by_max_row[row - 1])
      if (hit[x] == 0) return false;  // set can no longer be hit
    if (row > h.k) return true;
    for (int col = 1; col <= h.k; ++col) {
      for (int x : sets_at[row][col]) ++hit[x];
      rho[row] = col;
      if (self(self, row + 1)) return true;
      for (int x : sets_at[row][col]) --hit[x];
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = dfs(dfs, 1);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = RowSelectionWitness{std::vector<int>(rho.begin() + 1, rho.end())};
  }
  return result;
}

SolveResult solve_closest_string_enum(const ClosestStringInstance& inst, Budget& budget) {
  int t = static_cast<int>(inst.strings.size());
  std::vector<int> center(inst.length, 0);
  std::vector<int> mismatches(t, 0);
  SolveResult result;

  auto dfs = [&](auto&& self, int pos) -> bool {
    if (!budget.tick()) return false;
    if (pos == inst.length) return true;
    for (int ch = 1; ch <= inst.sigma; ++ch) {
      bool ok = true;
      for (int i = 0; i < t; ++i)
        if (inst.strings[i][pos] != ch && ++mismatches[i] > inst.d) ok = false;
      center[pos] = ch;
      if (ok && self(self, pos + 1)) return true;
      for (int i = 0; i < t; ++i)
        if (inst.strings[i][pos] != ch) --mismatches[i];
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = dfs(dfs, 0);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = CenterStringWitness{center};
  }
  return result;
}

SolveResult solve_cp(const ConstrainedPermutationInstance& inst, Budget& budget) {
  int k = inst.kprime;
  int m = static_cast<int>(inst.sets.size());
  if (k > 62) fail("EnvelopeExceeded", "constrained permutation ground set larger than 62");
  std::vector<std::uint64_t> set_mask(m, 0);
  for (int x = 0; x < m; ++x)
    for (int e : inst.sets[x]) set_mask[x] |= 1ULL << e;

  std::vector<int> rho(k + 1, 0);
  std::vector<int> hit(m, 0);
  std::uint64_t placed = 0;
  SolveResult result;

  auto dfs = [&](auto&& self, int pos) -> bool {
    if (!budget.tick()) return false;
    int last = pos > 1 ? rho[pos - 1] : 0;
    for (int x = 0; x < m; ++x) {
      if (hit[x]) continue;
      std::uint64_t remaining = set_mask[x] & ~placed;
      int cnt = std::popcount(remaining);
      if (cnt == 0) return false;  // unhittable
      if (cnt == 1 && !(last && (set_mask[x] >> last) & 1)) return false;
    }
    if (pos > k) return true;
    for (int e = 1; e <= k; ++e) {
      if ((placed >> e) & 1) continue;
      std::vector<int> newly;
      if (pos > 1) {
        std::uint64_t pair = (1ULL << e) | (1ULL << last);
        for (int x = 0; x < m; ++x)
          if (!hit[x] && (set_mask[x] & pair) == pair) {
            hit[x] = 1;
            newly.push_back(x);
          }
      }
      rho[pos] = e;
      placed |= 1ULL << e;
      if (self(self, pos + 1)) return true;
      placed &= ~(1ULL << e);
      for (int x : newly) hit[x] = 0;
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = dfs(dfs, 1);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = PermutationWitness{std::vector<int>(rho.begin() + 1, rho.end())};
  }
  return result;
}

SolveResult solve_chromatic(const ChromaticInstance& inst, Budget& budget) {
  int n = inst.graph.n;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : inst.graph.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n + 1, 0);
  SolveResult result;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (!budget.tick()) return false;
    if (v > n) return true;
    for (int c = 1; c <= inst.ell; ++c) {
      bool ok = true;
      for (int u : adj[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
      color[v] = 0;
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = dfs(dfs, 1);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = ColorAssignmentWitness{std::vector<int>(color.begin() + 1, color.end())};
  }
  return result;
}

// 3^n DFS with forward checking on candidate masks.
SolveResult solve_three_coloring(const ThreeColoringInstance& inst, Budget& budget) {
  int n = inst.graph.n;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : inst.graph.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n + 1, 0);
  std::vector<int> mask(n + 1, 0b111);
  SolveResult result;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (!budget.tick()) return false;
    if (v > n) return true;
    for (int c = 1; c <= 3; ++c) {
      if (!((mask[v] >> (c - 1)) & 1)) continue;
      std::vector<int> touched;
      bool ok = true;
      for (int u : adj[v])
        if (!color[u] && u > v) {
          if ((mask[u] >> (c - 1)) & 1) {
            mask[u] &= ~(1 << (c - 1));
            touched.push_back(u);
            if (mask[u] == 0) ok = false;
          }
        }
      color[v] = c;
      if (ok && self(self, v + 1)) return true;
      color[v] = 0;
      for (int u : touched) mask[u] |= 1 << (c - 1);
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = dfs(dfs, 1);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = ThreeColoringWitness{std::vector<int>(color.begin() + 1, color.end())};
  }
  return result;
}

// DPLL: unit propagation plus lowest-index branching, true before false.
SolveResult solve_sat3(const CnfFormula& f, Budget& budget) {
  int n = f.num_vars;
  std::vector<int> assign(n + 1, 0);  // 0 unassigned, +1 true, -1 false
  SolveResult result;

  auto clause_state = [&](const std::vector<int>& cl, int& unit) {
    // 1 = satisfied, 0 = undecided, -1 = conflict; unit = forcing literal if any
    unit = 0;
    int unassigned = 0, last = 0;
    for (int lit : cl) {
      int v = assign[std::abs(lit)];
      if (v == 0) {
        ++unassigned;
        last = lit;
      } else if ((lit > 0) == (v > 0)) {
        return 1;
      }
    }
    if (unassigned == 0) return -1;
    if (unassigned == 1) unit = last;
    return 0;
  };

  auto dfs = [&](auto&& self) -> bool {
    if (!budget.tick()) return false;
    std::vector<int> trail;
    // Unit propagation to fixpoint.
    for (;;) {
      bool changed = false, conflict = false;
      for (const auto& cl : f.clauses) {
        int unit;
        int st = clause_state(cl, unit);
        if (st == -1) {
          conflict = true;
          break;
        }
        if (st == 0 && unit != 0) {
          assign[std::abs(unit)] = unit > 0 ? 1 : -1;
          trail.push_back(std::abs(unit));
          changed = true;
        }
      }
      if (conflict) {
        for (int v : trail) assign[v] = 0;
        return false;
      }
      if (!changed) break;
    }
    int branch = 0;
    for (int v = 1; v <= n && !branch; ++v)
      if (assign[v] == 0) branch = v;
    if (!branch) {
      bool all_sat = true;
      for (const auto& cl : f.clauses) {
        int unit;
        if (clause_state(cl, unit) != 1) all_sat = false;
      }
      if (all_sat) return true;
      for (int v : trail) assign[v] = 0;
      return false;
    }
    for (int val : {1, -1}) {
      assign[branch] = val;
      if (self(self)) return true;
      assign[branch] = 0;
      if (budget.exceeded) {
        for (int v : trail) assign[v] = 0;
        return false;
      }
    }
    for (int v : trail) assign[v] = 0;
    return false;
  };

  bool yes = dfs(dfs);
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    std::vector<bool> values(n);
    for (int v = 1; v <= n; ++v) values[v - 1] = assign[v] > 0;
    result.witness = AssignmentWitness{values};
  }
  return result;
}

// Demand-ordered simple-path DFS with vertex disjointness. Terminals of every
// demand are reserved up front; complete regardless of the ordering.
SolveResult solve_disjoint_paths(const DisjointPathsInstance& inst, Budget& budget) {
  int n = inst.n;
  int p = static_cast<int>(inst.demands.size());
  std::vector<std::vector<int>> out_adj(n + 1);
  for (auto [u, v] : inst.links) {
    out_adj[u].push_back(v);
    if (!inst.directed) out_adj[v].push_back(u);
  }
  for (auto& a : out_adj) std::sort(a.begin(), a.end());

  // Fewest-candidate-first: number of shortest s-t paths capped at 64, with
  // degree sum as the fallback key.
  auto shortest_path_count = [&](int s, int t) -> long long {
    std::vector<int> dist(n + 1, -1);
    std::vector<long long> ways(n + 1, 0);
    std::vector<int> queue{s};
    dist[s] = 0;
    ways[s] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : out_adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) ways[v] = std::min(ways[v] + ways[u], 65LL);
      }
    }
    return dist[t] < 0 ? 0 : ways[t];
  };
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<long long, long long>> key(p);
  for (int i = 0; i < p; ++i) {
    auto [s, t] = inst.demands[i];
    long long cnt = shortest_path_count(s, t);
    long long degsum = static_cast<long long>(out_adj[s].size()) + out_adj[t].size();
    key[i] = {cnt <= 64 ? cnt : 65 + degsum, degsum};
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key[a] < key[b]; });

  std::vector<bool> used(n + 1, false);
  for (auto [s, t] : inst.demands) used[s] = used[t] = true;
  std::vector<std::vector<int>> paths(p);
  SolveResult result;

  auto route = [&](auto&& self, int idx, int at) -> bool {
    if (!budget.tick()) return false;
    int demand = order[idx];
    int target = inst.demands[demand].second;
    if (at == target) {
      if (idx + 1 == p) return true;
      int next = order[idx + 1];
      paths[next].push_back(inst.demands[next].first);
      if (self(self, idx + 1, inst.demands[next].first)) return true;
      paths[next].pop_back();
      return false;
    }
    for (int v : out_adj[at]) {
      if (v == target) {
        paths[demand].push_back(v);
        if (self(self, idx, v)) return true;
        paths[demand].pop_back();
      } else if (!used[v]) {
        used[v] = true;
        paths[demand].push_back(v);
        if (self(self, idx, v)) return true;
        paths[demand].pop_back();
        used[v] = false;
      }
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes;
  if (p == 0) {
    yes = budget.tick();
  } else {
    paths[order[0]].push_back(inst.demands[order[0]].first);
    yes = route(route, 0, inst.demands[order[0]].first);
  }
  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = PathSystemWitness{paths};
  }
  return result;
}

// True-twin classes: identical closed neighborhoods. Canonical orderings place
// twins in ascending index order, collapsing factorial blow-up inside cliques.
std::vector<int> twin_class_representative(const SimpleGraph& g) {
  int n = g.n;
  std::vector<std::set<int>> closed(n + 1);
  for (auto [u, v] : g.edges) {
    closed[u].insert(v);
    closed[v].insert(u);
  }
  for (int v = 1; v <= n; ++v) closed[v].insert(v);
  std::vector<int> rep(n + 1);
  for (int v = 1; v <= n; ++v) {
    rep[v] = v;
    for (int u = 1; u < v; ++u)
      if (closed[u] == closed[v]) {
        rep[v] = rep[u];
        break;
      }
  }
  return rep;
}

SolveResult solve_distortion(const DistortionInstance& inst, Budget& budget) {
  if (!is_connected(inst.graph)) fail("InvariantError", "distortion requires a connected graph");
  int n = inst.graph.n;
  SolveResult result;
  auto dist = all_pairs_distances(inst.graph);
  auto rep = twin_class_representative(inst.graph);
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : inst.graph.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<bool> placed(n + 1, false);
  std::vector<long long> pos(n + 1, 0);
  std::vector<int> sequence;
  std::vector<int> unplaced_neighbors(n + 1, 0);
  for (int v = 1; v <= n; ++v) unplaced_neighbors[v] = static_cast<int>(adj[v].size());

  // A vertex may be placed only when every smaller twin is already placed.
  auto twin_ready = [&](int v) {
    if (rep[v] == v) return true;
    for (int u = rep[v]; u < v; ++u)
      if (rep[u] == rep[v] && !placed[u]) return false;
    return true;
  };

  auto dfs = [&](auto&& self) -> bool {
    if (!budget.tick()) return false;
    if (static_cast<int>(sequence.size()) == n) {
      // Pushing embeddings are non-contracting per the cited fact; re-check
      // the full pairwise condition instead of trusting it.
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
          if (std::llabs(pos[u] - pos[v]) < dist[u - 1][v - 1]) return false;
      return true;
    }
    int last = sequence.back();
    for (int v = 1; v <= n; ++v) {
      if (placed[v] || !twin_ready(v)) continue;
      long long at = pos[last] + dist[last - 1][v - 1];
      bool ok = true;
      for (int u : adj[v])
        if (placed[u] && at - pos[u] > inst.d) {
          ok = false;
          break;
        }
      if (!ok) continue;
      placed[v] = true;
      pos[v] = at;
      sequence.push_back(v);
      for (int u : adj[v]) --unplaced_neighbors[u];
      // Frontier rule: any placed vertex with an unplaced neighbor must stay
      // within d of every future position.
      bool frontier_ok = true;
      for (int u = 1; u <= n && frontier_ok; ++u)
        if (placed[u] && unplaced_neighbors[u] > 0 && at > pos[u] + inst.d) frontier_ok = false;
      if (frontier_ok && self(self)) return true;
      for (int u : adj[v]) ++unplaced_neighbors[u];
      sequence.pop_back();
      placed[v] = false;
      if (budget.exceeded) return false;
    }
    return false;
  };

  bool yes = false;
  for (int start = 1; start <= n && !yes && !budget.exceeded; ++start) {
    if (!twin_ready(start)) continue;
    placed[start] = true;
    pos[start] = 0;
    sequence.push_back(start);
    for (int u : adj[start]) --unplaced_neighbors[u];
    if (budget.tick()) yes = dfs(dfs);
    if (!yes) {
      for (int u : adj[start]) ++unplaced_neighbors[u];
      sequence.pop_back();
      placed[start] = false;
    }
  }

  if (budget.exceeded) {
    result.outcome = Outcome::BudgetExceeded;
  } else if (yes) {
    result.outcome = Outcome::Yes;
    result.witness = LineEmbeddingWitness{std::vector<long long>(pos.begin() + 1, pos.end())};
  }
  return result;
}

template <typename F>
SolveResult timed(std::uint64_t budget_limit, F&& f) {
  Budget budget{budget_limit};
  auto t0 = std::chrono::steady_clock::now();
  SolveResult result = f(budget);
  result.nodes_explored = budget.nodes;
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace

bool verify_witness(const ProblemInstance& inst, const Witness& w) {
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CnfFormula>) return verify_sat3(v, w);
        else if constexpr (std::is_same_v<T, ThreeColoringInstance>) return verify_three_coloring(v, w);
        else if constexpr (std::is_same_v<T, TableGraph>) return verify_table(v, w);
        else if constexpr (std::is_same_v<T, HittingSetInstance>) return verify_hitting_set(v, w);
        else if constexpr (std::is_same_v<T, ClosestStringInstance>) return verify_closest_string(v, w);
        else if constexpr (std::is_same_v<T, ConstrainedPermutationInstance>) return verify_cp(v, w);
        else if constexpr (std::is_same_v<T, DistortionInstance>) return verify_distortion(v, w);
        else if constexpr (std::is_same_v<T, DisjointPathsInstance>) return verify_disjoint_paths(v, w);
        else if constexpr (std::is_same_v<T, ChromaticInstance>) return verify_chromatic(v, w);
      },
      inst);
}

SolveResult solve_exhaustive(const ProblemInstance& inst, std::uint64_t budget) {
  return std::visit(
      [&](const auto& v) -> SolveResult {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CnfFormula>)
          return timed(budget, [&](Budget& b) { return solve_sat3(v, b); });
        else if constexpr (std::is_same_v<T, ThreeColoringInstance>)
          return timed(budget, [&](Budget& b) { return solve_three_coloring(v, b); });
        else if constexpr (std::is_same_v<T, TableGraph>)
          return timed(budget, [&](Budget& b) { return solve_table(v, b); });
        else if constexpr (std::is_same_v<T, HittingSetInstance>)
          return timed(budget, [&](Budget& b) { return solve_hitting_set(v, b); });
        else if constexpr (std::is_same_v<T, ClosestStringInstance>)
          return timed(budget, [&](Budget& b) { return solve_closest_string_enum(v, b); });
        else if constexpr (std::is_same_v<T, ConstrainedPermutationInstance>)
          return timed(budget, [&](Budget& b) { return solve_cp(v, b); });
        else if constexpr (std::is_same_v<T, DistortionInstance>)
          return timed(budget, [&](Budget& b) { return solve_distortion(v, b); });
        else if constexpr (std::is_same_v<T, DisjointPathsInstance>)
          return timed(budget, [&](Budget& b) { return solve_disjoint_paths(v, b); });
        else if constexpr (std::is_same_v<T, ChromaticInstance>)
          return timed(budget, [&](Budget& b) { return solve_chromatic(v, b); });
      },
      inst);
}

SolveResult solve_closest_string_branching(const ClosestStringInstance& inst,
                                           std::uint64_t budget_limit) {
  if (inst.strings.empty()) fail("InvariantError", "branching solver needs t >= 1");
  return timed(budget_limit, [&](Budget& budget) {
    SolveResult result;
    std::vector<int> candidate = inst.strings[0];

    auto dfs = [&](auto&& self, int remaining) -> bool {
      if (!budget.tick()) return false;
      int violator = -1;
      for (size_t i = 0; i < inst.strings.size(); ++i)
        if (hamming(candidate, inst.strings[i]) > inst.d) {
          violator = static_cast<int>(i);
          break;
        }
      if (violator < 0) return true;
      if (remaining == 0) return false;
      std::vector<int> positions;  // first min(d+1, mismatches) mismatches
      for (int p = 0; p < inst.length && static_cast<int>(positions.size()) < inst.d + 1; ++p)
        if (candidate[p] != inst.strings[violator][p]) positions.push_back(p);
      for (int p : positions) {
        int saved = candidate[p];
        candidate[p] = inst.strings[violator][p];
        if (self(self, remaining - 1)) return true;
        candidate[p] = saved;
        if (budget.exceeded) return false;
      }
      return false;
    };

    bool yes = dfs(dfs, inst.d);
    if (budget.exceeded) {
      result.outcome = Outcome::BudgetExceeded;
    } else if (yes) {
      result.outcome = Outcome::Yes;
      result.witness = CenterStringWitness{candidate};
    }
    return result;
  });
}

SolveResult solve_distortion_pushing(const DistortionInstance& inst, std::uint64_t budget_limit) {
  if (!is_connected(inst.graph)) fail("InvariantError", "distortion requires a connected graph");
  return timed(budget_limit, [&](Budget& b) { return solve_distortion(inst, b); });
}

}  // namespace superexp

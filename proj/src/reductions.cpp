#include "superexp/reductions.hpp"

#include <algorithm>
#include <cmath>

#include "superexp/oracles.hpp"
#include "superexp/prng.hpp"

namespace superexp {

namespace {

// Literal vertex under the palette construction of sat3_to_3col.
int literal_vertex(const Sat3ColAux& aux, int lit) {
  return lit > 0 ? aux.var_pos(lit) : aux.var_neg(-lit);
}

std::vector<int> pad_clause(const std::vector<int>& clause) {
  std::vector<int> out = clause;
  while (out.size() < 3) out.push_back(out.back());
  return out;
}

}  // namespace

// ---- r1: 3SAT -> 3-Coloring ---------------------------------------------------

ReductionRecord sat3_to_3col(const CnfFormula& f) {
  for (const auto& cl : f.clauses) {
    if (cl.empty()) fail("InvariantError", "empty clause");
    if (cl.size() > 3) fail("ClauseWidth", "clause wider than 3");
  }
  Sat3ColAux aux{f.num_vars, static_cast<int>(f.clauses.size())};

  ThreeColoringInstance g;
  g.graph.n = 3 + 2 * f.num_vars + 5 * static_cast<int>(f.clauses.size());
  const int T = 1, F = 2, B = 3;
  g.graph.add_edge(T, F);
  g.graph.add_edge(T, B);
  g.graph.add_edge(F, B);
  for (int i = 1; i <= f.num_vars; ++i) {
    g.graph.add_edge(aux.var_pos(i), aux.var_neg(i));
    g.graph.add_edge(aux.var_pos(i), B);
    g.graph.add_edge(aux.var_neg(i), B);
  }
  // Clause gadget, 5 fresh vertices x1,y1,o1,x2,y2: triangle {x1,y1,o1} with
  // x1~l1, y1~l2; stack edge x2~o1; triangle {x2,y2,T} with y2~l3. Colorable
  // with the palette iff some literal has T's color (verified exhaustively
  // over all 8 literal combinations in the tests).
  for (int cidx = 0; cidx < aux.num_clauses; ++cidx) {
    auto lits = pad_clause(f.clauses[cidx]);
    int base = aux.gadget_base(cidx);
    int x1 = base, y1 = base + 1, o1 = base + 2, x2 = base + 3, y2 = base + 4;
    g.graph.add_edge(x1, y1);
    g.graph.add_edge(x1, o1);
    g.graph.add_edge(y1, o1);
    g.graph.add_edge(x2, o1);
    g.graph.add_edge(x2, y2);
    g.graph.add_edge(x2, T);
    g.graph.add_edge(y2, T);
    g.graph.add_edge(x1, literal_vertex(aux, lits[0]));
    g.graph.add_edge(y1, literal_vertex(aux, lits[1]));
    g.graph.add_edge(y2, literal_vertex(aux, lits[2]));
  }
  return {"sat3_to_3col", f, g, aux};
}

// ---- r2: 3-Coloring -> k x k Clique --------------------------------------------

int smallest_clique_side(int n) {
  for (int k = 1;; ++k) {
    int block = (n + k - 1) / k;
    if (block > 19) continue;  // 3^block would dwarf any workable k
    long long need = 1;
    for (int i = 0; i < block; ++i) need *= 3;
    if (need <= k) return k;
  }
}

namespace {

// Proper 3-colorings of the induced subgraph on `group`, lexicographic with
// colors ordered 1<2<3 (first vertex most significant).
std::vector<std::vector<int>> proper_colorings(const SimpleGraph& g, const std::vector<int>& group) {
  std::vector<std::vector<int>> out;
  int sz = static_cast<int>(group.size());
  std::vector<int> colors(sz, 1);
  for (;;) {
    bool proper = true;
    for (int a = 0; a < sz && proper; ++a)
      for (int b = a + 1; b < sz && proper; ++b)
        if (g.adjacent(group[a], group[b]) && colors[a] == colors[b]) proper = false;
    if (proper) out.push_back(colors);
    int i = sz - 1;
    while (i >= 0 && colors[i] == 3) --i;
    if (i < 0) break;
    ++colors[i];
    for (int j = i + 1; j < sz; ++j) colors[j] = 1;
  }
  if (sz == 0) return {{}};
  return out;
}

}  // namespace

ReductionRecord threecol_to_kkclique(const SimpleGraph& g, int k) {
  int n = g.n;
  int block = k >= 1 ? (n + k - 1) / k : 1;
  long long need = 1;
  for (int i = 0; i < block && need <= (1LL << 40); ++i) need *= 3;
  if (k < 1 || need > k)
    fail("KTooSmall", "need 3^ceil(n/k) <= k, got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));

  KkCliqueAux aux;
  aux.k = k;
  for (int i = 0; i < k; ++i) {
    std::vector<int> group;
    for (int v = i * block + 1; v <= std::min(n, (i + 1) * block); ++v) group.push_back(v);
    aux.groups.push_back(group);
  }
  for (const auto& group : aux.groups) aux.colorings.push_back(proper_colorings(g, group));

  TableGraph t;
  t.k = k;
  t.flavor = TableFlavor::Clique;
  auto compatible = [&](int i1, int j1, int i2, int j2) {
    const auto& g1 = aux.groups[i1];
    const auto& g2 = aux.groups[i2];
    const auto& c1 = aux.colorings[i1][j1];
    const auto& c2 = aux.colorings[i2][j2];
    for (size_t a = 0; a < g1.size(); ++a)
      for (size_t b = 0; b < g2.size(); ++b)
        if (g.adjacent(g1[a], g2[b]) && c1[a] == c2[b]) return false;
    return true;
  };
  for (int i1 = 0; i1 < k; ++i1)
    for (int i2 = i1 + 1; i2 < k; ++i2)
      for (size_t j1 = 0; j1 < aux.colorings[i1].size(); ++j1)
        for (size_t j2 = 0; j2 < aux.colorings[i2].size(); ++j2)
          if (compatible(i1, static_cast<int>(j1), i2, static_cast<int>(j2)))
            t.add_edge({i1 + 1, static_cast<int>(j1) + 1}, {i2 + 1, static_cast<int>(j2) + 1});

  ThreeColoringInstance source{g};
  return {"3col_to_kkclique", source, t, aux};
}

// ---- r3/r5: random coloring and recoloring -------------------------------------

TableColoring sample_random_coloring(int k, std::uint64_t seed) {
  if (k < 1) fail("RangeError", "k must be positive");
  SplitMix64 rng(seed);
  TableColoring c(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i][j] = static_cast<int>(rng.below(k)) + 1;
  return c;
}

ReductionRecord recolor_with(const TableGraph& inst, const TableColoring& c) {
  if (inst.flavor != TableFlavor::Clique)
    fail("FlavorMismatch", "recolor_with takes a kk_clique instance");
  int k = inst.k;
  if (static_cast<int>(c.size()) != k)
    fail("SizeMismatch", "coloring has wrong number of rows");
  for (const auto& row : c) {
    if (static_cast<int>(row.size()) != k) fail("SizeMismatch", "coloring row has wrong size");
    for (int v : row)
      if (v < 1 || v > k + 1) fail("RangeError", "color out of range [k+1]");
  }

  RecolorAux aux;
  aux.c = c;
  aux.cprime.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (c[i][j] == k + 1) continue;  // never-selected marker doubles as a clash
      bool clash = false;
      for (int j2 = 0; j2 < k; ++j2)
        if (j2 != j && c[i][j2] == c[i][j]) clash = true;
      if (!clash) aux.cprime[i][j] = c[i][j];
    }

  TableGraph target;
  target.k = k;
  target.flavor = TableFlavor::PermutationClique;
  for (const auto& [cell_a, cell_b] : inst.edges) {
    int ca = aux.cprime[cell_a.first - 1][cell_a.second - 1];
    int cb = aux.cprime[cell_b.first - 1][cell_b.second - 1];
    if (ca != 0 && cb != 0) target.add_edge({cell_a.first, ca}, {cell_b.first, cb});
  }
  return {"recolor", inst, target, aux};
}

std::vector<ReductionRecord> kkclique_to_perm_derandomized(const TableGraph& inst,
                                                           const ColoringFamily& family) {
  if (inst.flavor != TableFlavor::Clique)
    fail("FlavorMismatch", "derandomized recoloring takes a kk_clique instance");
  if (family.k != inst.k) fail("SizeMismatch", "family and instance have different k");
  std::vector<ReductionRecord> records;
  records.reserve(family.members.size());
  for (const auto& member : family.members) {
    TableColoring c(inst.k, std::vector<int>(inst.k));
    for (int i = 0; i < inst.k; ++i)
      for (int j = 0; j < inst.k; ++j) c[i][j] = member.table[i * inst.k + j];
    records.push_back(recolor_with(inst, c));
  }
  return records;
}

// ---- r6: complement --------------------------------------------------------------

TableGraph complement_table_graph(const TableGraph& inst) {
  TableFlavor target_flavor;
  if (inst.flavor == TableFlavor::PermutationClique)
    target_flavor = TableFlavor::PermutationIndependentSet;
  else if (inst.flavor == TableFlavor::PermutationIndependentSet)
    target_flavor = TableFlavor::PermutationClique;
  else
    fail("FlavorMismatch", "complement toggles the permutation clique/IS pair");

  TableGraph out;
  out.k = inst.k;
  out.flavor = target_flavor;
  int side = inst.side();
  for (int i1 = 1; i1 <= side; ++i1)
    for (int j1 = 1; j1 <= side; ++j1)
      for (int i2 = i1; i2 <= side; ++i2)
        for (int j2 = (i2 == i1 ? j1 + 1 : 1); j2 <= side; ++j2)
          if (!inst.adjacent({i1, j1}, {i2, j2})) out.add_edge({i1, j1}, {i2, j2});
  return out;
}

ReductionRecord complement_record(const TableGraph& inst) {
  return {"complement", inst, complement_table_graph(inst), ComplementAux{}};
}

// ---- r7: k x k Permutation IS -> 2k x 2k BPIS -------------------------------------

ReductionRecord permis_to_bpis(const TableGraph& inst) {
  if (inst.flavor != TableFlavor::PermutationIndependentSet)
    fail("FlavorMismatch", "permis_to_bpis takes a kk_perm_is instance");
  int k = inst.k;
  TableGraph target;
  target.k = k;
  target.flavor = TableFlavor::BipartitePermutationIndependentSet;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int j2 = 1; j2 <= k; ++j2)
        if (j2 != j) target.add_edge({i, j}, {i + k, j2 + k});
  for (const auto& [a, b] : inst.edges)
    target.add_edge({a.first, a.second}, {b.first + k, b.second + k});
  return {"permis_to_bpis", inst, target, PermisBpisAux{k}};
}

// ---- r8: BPIS -> row-restricted Hitting Set ---------------------------------------

ReductionRecord bpis_to_hitting_set(const TableGraph& inst) {
  if (inst.flavor != TableFlavor::BipartitePermutationIndependentSet)
    fail("FlavorMismatch", "bpis_to_hs takes a bpis instance");
  int k = inst.k;
  int side = 2 * k;
  HittingSetInstance target;
  target.k = side;
  target.row_restricted = true;

  auto transpose = [](std::vector<Cell> cells) {
    for (auto& c : cells) std::swap(c.first, c.second);
    return cells;
  };

  // Row sets: first k elements of rows 1..k, last k of rows k+1..2k.
  for (int i = 1; i <= side; ++i) {
    std::vector<Cell> set;
    int lo = i <= k ? 1 : k + 1;
    for (int j = lo; j < lo + k; ++j) set.push_back({i, j});
    target.sets.push_back(transpose(set));
  }
  // One set per edge; canonical order puts the I1 endpoint first.
  for (const auto& [a, b] : inst.edges) {
    std::vector<Cell> set;
    for (int j = 1; j <= k; ++j)
      if (j != a.second) set.push_back({a.first, j});
    for (int j = k + 1; j <= side; ++j)
      if (j != b.second) set.push_back({b.first, j});
    target.sets.push_back(transpose(set));
  }
  target.canonicalize();
  return {"bpis_to_hs", inst, target, BpisHsAux{k}};
}

// ---- r9: Hitting Set -> Closest String --------------------------------------------

ReductionRecord hitting_set_to_closest_string(const HittingSetInstance& inst) {
  if (!inst.row_restricted)
    fail("NotRowRestricted", "hs_to_cs requires a row-restricted instance");
  int k = inst.k;
  int m = static_cast<int>(inst.sets.size());

  ClosestStringInstance target;
  target.sigma = 2 * k + 1;
  target.length = k;
  target.d = k - 1;
  for (int x = 0; x < m; ++x) {
    std::vector<int> row_char(k + 1, 0);
    for (Cell c : inst.sets[x]) row_char[c.first] = c.second;
    for (int y = 1; y <= k + 1; ++y) {
      std::vector<int> s(k);
      for (int i = 1; i <= k; ++i) s[i - 1] = row_char[i] ? row_char[i] : y + k;
      target.strings.push_back(s);
    }
  }
  return {"hs_to_cs", inst, target, HsCsAux{k, m}};
}

// ---- r10: BPIS -> Constrained Permutation ------------------------------------------

ReductionRecord bpis_to_constrained_permutation(const TableGraph& inst) {
  if (inst.flavor != TableFlavor::BipartitePermutationIndependentSet)
    fail("FlavorMismatch", "bpis_to_cp takes a bpis instance");
  int k = inst.k;
  int side = 2 * k;
  BpisCpAux aux{k};

  ConstrainedPermutationInstance target;
  target.kprime = 24 * k;

  std::map<int, std::string> labels;
  for (int ell = 1; ell <= 3; ++ell)
    for (int i = 1; i <= side; ++i) {
      labels[aux.r(ell, i)] = "r" + std::to_string(ell) + "_" + std::to_string(i);
      labels[aux.rbar(ell, i)] = "rb" + std::to_string(ell) + "_" + std::to_string(i);
      labels[aux.c(ell, i)] = "c" + std::to_string(ell) + "_" + std::to_string(i);
      labels[aux.cbar(ell, i)] = "cb" + std::to_string(ell) + "_" + std::to_string(i);
    }
  target.element_labels = labels;

  // Groups 1 and 2: each name pairs with its bar.
  for (int ell = 1; ell <= 3; ++ell)
    for (int i = 1; i <= side; ++i) {
      target.sets.push_back({aux.r(ell, i), aux.rbar(ell, i)});
      target.sets.push_back({aux.c(ell, i), aux.cbar(ell, i)});
    }
  // Group 3: all layer pairs, rows, and column subsets X.
  for (int ell1 = 1; ell1 <= 3; ++ell1)
    for (int ell2 = ell1 + 1; ell2 <= 3; ++ell2)
      for (int i = 1; i <= side; ++i)
        for (std::uint64_t mask = 0; mask < (1ULL << side); ++mask) {
          std::vector<int> set{aux.rbar(ell1, i), aux.rbar(ell2, i)};
          for (int j = 1; j <= side; ++j) {
            if ((mask >> (j - 1)) & 1)
              set.push_back(aux.c(ell1, j));
            else
              set.push_back(aux.c(ell2, j));
          }
          target.sets.push_back(set);
        }
  // Groups 4 and 5: row i must pick a column on its own side.
  for (int i = 1; i <= k; ++i) {
    std::vector<int> set{aux.rbar(1, i)};
    for (int j = 1; j <= k; ++j) set.push_back(aux.c(1, j));
    target.sets.push_back(set);
  }
  for (int i = k + 1; i <= side; ++i) {
    std::vector<int> set{aux.rbar(1, i)};
    for (int j = k + 1; j <= side; ++j) set.push_back(aux.c(1, j));
    target.sets.push_back(set);
  }
  // Group 6: one set per edge.
  for (const auto& [a, b] : inst.edges) {
    std::vector<int> set{aux.rbar(1, a.first), aux.rbar(1, b.first)};
    for (int j = 1; j <= k; ++j)
      if (j != a.second) set.push_back(aux.c(1, j));
    for (int j = k + 1; j <= side; ++j)
      if (j != b.second) set.push_back(aux.c(1, j));
    target.sets.push_back(set);
  }
  target.canonicalize();
  return {"bpis_to_cp", inst, target, aux};
}

// ---- r11: Constrained Permutation -> Distortion ------------------------------------

ReductionRecord constrained_permutation_to_distortion(
    const ConstrainedPermutationInstance& inst) {
  int k = inst.kprime;
  int m = static_cast<int>(inst.sets.size());
  for (const auto& set : inst.sets)
    for (int e : set)
      if (e < 1 || e > k) fail("SetOutOfRange", "set element " + std::to_string(e));

  CpDistortionAux aux;
  aux.k = k;
  aux.m = m;
  aux.d = 2 * k;
  int d = aux.d;
  int next = 0;
  aux.u.assign(m, std::vector<int>(k));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) aux.u[i][j] = ++next;
  aux.s.resize(m);
  for (int i = 0; i < m; ++i) aux.s[i] = ++next;
  aux.ca.resize(d + 1);
  for (int a = 0; a <= d; ++a) aux.ca[a] = ++next;
  aux.cb.resize(d + 1);
  for (int a = 0; a <= d; ++a) aux.cb[a] = ++next;
  aux.v.resize(m + 1);
  for (int i = 0; i <= m; ++i) aux.v[i] = ++next;

  DistortionInstance target;
  target.graph.n = next;
  target.d = d;
  auto& g = target.graph;
  for (int a = 0; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) {
      g.add_edge(aux.ca[a], aux.ca[b]);
      g.add_edge(aux.cb[a], aux.cb[b]);
    }
  for (int a = 1; a <= d; ++a) {
    g.add_edge(aux.ca[a], aux.v[0]);      // every C_a vertex but c_a^1
    g.add_edge(aux.cb[a], aux.v[m]);      // every C_b vertex but c_b^1
  }
  for (int i = 0; i < m; ++i) g.add_edge(aux.v[i], aux.v[i + 1]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      g.add_edge(aux.u[i][j], aux.v[i]);
      g.add_edge(aux.u[i][j], aux.v[i + 1]);
      if (i + 1 < m) g.add_edge(aux.u[i][j], aux.u[i + 1][j]);
    }
  for (int i = 0; i < m; ++i)
    for (int e : inst.sets[i]) g.add_edge(aux.s[i], aux.u[i][e - 1]);

  return {"cp_to_distortion", inst, target, aux};
}

// ---- r12: Hitting Set -> Directed Disjoint Paths -----------------------------------

ReductionRecord hitting_set_to_directed_disjoint_paths(const HittingSetInstance& inst) {
  int k = inst.k;
  int m = static_cast<int>(inst.sets.size());
  HsDdpAux aux;
  aux.k = k;
  aux.m = m;

  DisjointPathsInstance target;
  target.directed = true;
  int next = 0;
  auto fresh = [&] { return ++next; };

  aux.gadgets.resize(m);
  for (int t = 0; t < m; ++t) {
    auto& g = aux.gadgets[t];
    g.a.resize(k);
    g.b.resize(k);
    for (int i = 0; i < k; ++i) g.a[i] = fresh();
    for (int i = 0; i < k; ++i) g.b[i] = fresh();
    g.v.assign(k, std::vector<int>(k));
    if (t == 0) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g.v[i][j] = fresh();
    } else {
      g.v = aux.gadgets[t - 1].vstar;  // chain identification
    }
    g.c.assign(k, std::vector<int>(k + 1));
    g.d.assign(k, std::vector<int>(k));
    g.vstar.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i) {
      g.c[i][0] = fresh();
      for (int j = 1; j <= k; ++j) {
        g.d[i][j - 1] = fresh();
        g.vstar[i][j - 1] = fresh();
        g.c[i][j] = fresh();
      }
    }
    g.f.assign(k, std::vector<int>(k));
    g.f1.assign(k, std::vector<int>(k));
    g.f2.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        g.f[i][j] = fresh();
        g.f1[i][j] = fresh();
        g.f2[i][j] = fresh();
      }
    g.s = fresh();
    g.t = fresh();
  }
  target.n = next;

  for (int t = 0; t < m; ++t) {
    const auto& g = aux.gadgets[t];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        target.add_link(g.a[i], g.v[i][j]);
        target.add_link(g.v[i][j], g.b[j]);
      }
    for (int i = 0; i < k; ++i) {
      for (int j = 1; j <= k; ++j) {
        target.add_link(g.c[i][j - 1], g.d[i][j - 1]);
        target.add_link(g.d[i][j - 1], g.vstar[i][j - 1]);
        target.add_link(g.vstar[i][j - 1], g.c[i][j]);
      }
      for (int j = 0; j < k; ++j) {
        target.add_link(g.b[j], g.f[i][j]);
        target.add_link(g.f[i][j], g.c[i][j + 1]);
        target.add_link(g.f1[i][j], g.f[i][j]);
        target.add_link(g.f[i][j], g.f2[i][j]);
        target.add_link(g.f1[i][j], g.c[i][0]);
        target.add_link(g.c[i][j], g.f2[i][j]);
      }
    }
    for (Cell cell : inst.sets[t]) {
      target.add_link(g.s, g.d[cell.first - 1][cell.second - 1]);
      target.add_link(g.d[cell.first - 1][cell.second - 1], g.t);
    }
    for (int i = 0; i < k; ++i) target.demands.push_back({g.a[i], g.c[i][k]});
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) target.demands.push_back({g.f1[i][j], g.f2[i][j]});
    target.demands.push_back({g.s, g.t});
  }

  // Bags B_{t,i,j} in lexicographic (t,i,j) order. The t=0 layer additionally
  // holds v_{i,j} of the first gadget, which lies on no P_i.
  PathDecomposition pd;
  for (int t = 0; t <= m; ++t)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::vector<int> bag;
        if (t >= 1) {
          const auto& g = aux.gadgets[t - 1];
          bag.insert(bag.end(), g.a.begin(), g.a.end());
          bag.insert(bag.end(), g.b.begin(), g.b.end());
          bag.push_back(g.s);
          bag.push_back(g.t);
          bag.push_back(g.f[i][j]);
          bag.push_back(g.f1[i][j]);
          bag.push_back(g.f2[i][j]);
          bag.push_back(g.c[i][0]);
          for (int jj = 1; jj <= k; ++jj) {
            bag.push_back(g.d[i][jj - 1]);
            bag.push_back(g.vstar[i][jj - 1]);
            bag.push_back(g.c[i][jj]);
          }
        }
        if (t < m) {
          const auto& g = aux.gadgets[t];
          bag.insert(bag.end(), g.a.begin(), g.a.end());
          bag.insert(bag.end(), g.b.begin(), g.b.end());
          if (t == 0) bag.push_back(g.v[i][j]);
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        if (!bag.empty()) pd.bags.push_back(bag);
      }
  target.decomposition = pd;

  return {"hs_to_ddp", inst, target, aux};
}

// ---- r13: Directed Disjoint Paths -> Disjoint Paths --------------------------------

ReductionRecord directed_dp_to_undirected_dp(const DisjointPathsInstance& inst) {
  if (!inst.directed) fail("FlavorMismatch", "ddp_to_udp takes a directed instance");
  if (!inst.decomposition)
    fail("MissingDecomposition", "ddp_to_udp needs a path decomposition of the input");

  int n = inst.n;
  int input_width = inst.decomposition->width();
  DdpUdpAux aux;
  aux.source_n = n;
  aux.num_main_demands = static_cast<int>(inst.demands.size());

  // Split vertices and the duplicated decomposition.
  PathDecomposition doubled;
  for (const auto& bag : inst.decomposition->bags) {
    std::vector<int> b;
    for (int v : bag) {
      b.push_back(2 * v - 1);
      b.push_back(2 * v);
    }
    std::sort(b.begin(), b.end());
    doubled.bags.push_back(b);
  }

  int next = 2 * n;
  std::vector<std::tuple<int, int, int>> subdivisions;
  for (auto [u, v] : inst.links) {
    int e = ++next;
    aux.arc_vertex[{u, v}] = e;
    subdivisions.push_back({2 * u, 2 * v - 1, e});
  }
  PathDecomposition pd = pd_subdivide(doubled, subdivisions);
  pd = make_last_bags_distinct(pd);

  DisjointPathsInstance target;
  target.directed = false;
  for (int v = 1; v <= n; ++v) target.add_link(2 * v - 1, 2 * v);
  for (auto [u, v] : inst.links) {
    int e = aux.arc_vertex[{u, v}];
    target.add_link(2 * u, e);
    target.add_link(e, 2 * v - 1);
  }
  for (auto [s, t] : inst.demands) target.demands.push_back({2 * s, 2 * t - 1});

  auto last = last_bag_index(pd, next);
  auto first = first_bag_index(pd, next);

  // Per split vertex: order in-arcs by last-bag index, extend intervals so
  // consecutive arc vertices co-occur, then hang the v^s/v^t pairs off them.
  std::vector<std::vector<int>> in_tails(n + 1);
  for (auto [u, v] : inst.links) in_tails[v].push_back(u);
  std::vector<std::tuple<int, int, int>> pair_subdivisions;
  for (int v = 1; v <= n; ++v) {
    int indeg = static_cast<int>(in_tails[v].size());
    if (indeg < 2) continue;
    auto& tails = in_tails[v];
    std::sort(tails.begin(), tails.end(), [&](int x, int y) {
      return last[aux.arc_vertex[{x, v}]] < last[aux.arc_vertex[{y, v}]];
    });
    DdpUdpAux::SplitDemands split;
    split.v = v;
    split.in_order = tails;
    for (int i = 0; i + 1 < indeg; ++i) {
      int e1 = aux.arc_vertex[{tails[i], v}];
      int e2 = aux.arc_vertex[{tails[i + 1], v}];
      if (last[e1] < first[e2]) {
        // Insert e1 into every bag between its interval and e2's; each such
        // bag contains v_in, so per-bag growth stays within the doubling.
        for (int b = last[e1] + 1; b <= first[e2]; ++b) pd.bags[b].push_back(e1);
        last[e1] = first[e2];
      }
      int vs = ++next, vt = ++next;
      split.vs.push_back(vs);
      split.vt.push_back(vt);
      target.add_link(vs, e1);
      target.add_link(vs, e2);
      target.add_link(vt, e1);
      target.add_link(vt, e2);
      target.demands.push_back({vs, vt});
      pair_subdivisions.push_back({e1, e2, vs});
      pair_subdivisions.push_back({e1, e2, vt});
    }
    aux.splits.push_back(split);
  }
  for (auto& bag : pd.bags) std::sort(bag.begin(), bag.end());
  pd = pd_subdivide(pd, pair_subdivisions);

  target.n = next;
  target.decomposition = pd;

  int cap = vertex_split_width_cap(input_width);
  if (pd.width() > cap)
    fail("InvariantError", "split decomposition width " + std::to_string(pd.width()) +
                               " exceeds the 2(w+1)+2 cap " + std::to_string(cap));
  return {"ddp_to_udp", inst, target, aux};
}

// ---- r14: Permutation Clique -> Chromatic Number -----------------------------------

ReductionRecord perm_clique_to_chromatic(const TableGraph& inst) {
  if (inst.flavor != TableFlavor::PermutationClique)
    fail("FlavorMismatch", "permclique_to_chromatic takes a kk_perm_clique instance");
  int k = inst.k;
  PermCliqueChromaticAux aux;
  aux.k = k;

  ChromaticInstance target;
  target.ell = k;
  int next = 2 * k;
  // w^{ij}_{xy} for i<j and ordered x != y with (i,x),(j,y) non-adjacent.
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
          if (x != y && !inst.adjacent({i, x}, {j, y})) aux.w[{i, j, x, y}] = ++next;
  target.graph.n = next;

  auto& g = target.graph;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      g.add_edge(i, j);          // C_a = {1..k}
      g.add_edge(k + i, k + j);  // C_b = {k+1..2k}
    }
  for (const auto& [key, w] : aux.w) {
    auto [i, j, x, y] = key;
    g.add_edge(w, k + i);
    g.add_edge(w, k + j);
    for (int z = 1; z <= k; ++z)
      if (z != x && z != y) g.add_edge(w, z);
  }
  for (int v = 1; v <= 2 * k; ++v) target.vertex_cover.insert(v);

  return {"permclique_to_chromatic", inst, target, aux};
}

// ---- witness mappings ---------------------------------------------------------------

namespace {

const std::vector<int>& selection_of(const Witness& w, const char* who) {
  if (auto* p = std::get_if<PermutationWitness>(&w)) return p->rho;
  if (auto* p = std::get_if<RowSelectionWitness>(&w)) return p->rho;
  fail("KindMismatch", std::string(who) + " expects a selection witness");
}

// Deterministic proper coloring of one clause gadget given literal colors.
std::vector<int> color_gadget(const std::array<int, 3>& literal_colors) {
  // Order: x1, y1, o1, x2, y2; palette T=1, F=2, B=3.
  for (int x1 = 1; x1 <= 3; ++x1)
    for (int y1 = 1; y1 <= 3; ++y1)
      for (int o1 = 1; o1 <= 3; ++o1)
        for (int x2 = 1; x2 <= 3; ++x2)
          for (int y2 = 1; y2 <= 3; ++y2) {
            if (x1 == literal_colors[0] || y1 == literal_colors[1] || y2 == literal_colors[2])
              continue;
            if (x1 == y1 || x1 == o1 || y1 == o1) continue;
            if (x2 == o1 || x2 == y2) continue;
            if (x2 == 1 || y2 == 1) continue;  // second triangle through T
            return {x1, y1, o1, x2, y2};
          }
  fail("InvalidSourceWitness", "clause gadget has no proper coloring for a satisfied clause");
}

Witness pull_back_sat3(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<Sat3ColAux>(rec.aux);
  const auto& colors = std::get<ThreeColoringWitness>(target_w).colors;
  int true_color = colors[0];  // T's color plays "true"
  std::vector<bool> values(aux.num_vars);
  for (int i = 1; i <= aux.num_vars; ++i)
    values[i - 1] = colors[aux.var_pos(i) - 1] == true_color;
  return AssignmentWitness{values};
}

Witness push_forward_sat3(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<Sat3ColAux>(rec.aux);
  const auto& f = std::get<CnfFormula>(rec.source);
  const auto& values = std::get<AssignmentWitness>(source_w).values;
  int n_target = std::get<ThreeColoringInstance>(rec.target).graph.n;
  std::vector<int> colors(n_target, 0);
  colors[0] = 1;  // T
  colors[1] = 2;  // F
  colors[2] = 3;  // B
  for (int i = 1; i <= aux.num_vars; ++i) {
    colors[aux.var_pos(i) - 1] = values[i - 1] ? 1 : 2;
    colors[aux.var_neg(i) - 1] = values[i - 1] ? 2 : 1;
  }
  for (int cidx = 0; cidx < aux.num_clauses; ++cidx) {
    auto lits = pad_clause(f.clauses[cidx]);
    std::array<int, 3> lit_colors{};
    for (int a = 0; a < 3; ++a) lit_colors[a] = colors[literal_vertex(aux, lits[a]) - 1];
    auto gadget = color_gadget(lit_colors);
    int base = aux.gadget_base(cidx);
    for (int a = 0; a < 5; ++a) colors[base - 1 + a] = gadget[a];
  }
  return ThreeColoringWitness{colors};
}

Witness pull_back_kkclique(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<KkCliqueAux>(rec.aux);
  const auto& rho = selection_of(target_w, "3col_to_kkclique pull-back");
  int n = std::get<ThreeColoringInstance>(rec.source).graph.n;
  std::vector<int> colors(n, 0);
  for (int i = 0; i < aux.k; ++i) {
    int j = rho[i];
    if (j < 1 || j > static_cast<int>(aux.colorings[i].size()))
      fail("ExtractionFailed", "selected cell is an isolated padding vertex");
    const auto& coloring = aux.colorings[i][j - 1];
    for (size_t pos = 0; pos < aux.groups[i].size(); ++pos)
      colors[aux.groups[i][pos] - 1] = coloring[pos];
  }
  return ThreeColoringWitness{colors};
}

Witness push_forward_kkclique(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<KkCliqueAux>(rec.aux);
  const auto& colors = std::get<ThreeColoringWitness>(source_w).colors;
  std::vector<int> rho(aux.k);
  for (int i = 0; i < aux.k; ++i) {
    std::vector<int> induced;
    for (int v : aux.groups[i]) induced.push_back(colors[v - 1]);
    auto it = std::find(aux.colorings[i].begin(), aux.colorings[i].end(), induced);
    if (it == aux.colorings[i].end())
      fail("InvalidSourceWitness", "induced coloring missing from the enumeration");
    rho[i] = static_cast<int>(it - aux.colorings[i].begin()) + 1;
  }
  return RowSelectionWitness{rho};
}

Witness pull_back_recolor(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<RecolorAux>(rec.aux);
  const auto& rho = std::get<PermutationWitness>(target_w).rho;
  int k = static_cast<int>(aux.c.size());
  std::vector<int> delta(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      if (aux.cprime[i][j] == rho[i]) {
        delta[i] = j + 1;
        break;
      }
    if (delta[i] == 0)
      fail("ExtractionFailed", "no unstarred preimage for row " + std::to_string(i + 1));
  }
  return RowSelectionWitness{delta};
}

std::optional<Witness> push_forward_recolor(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<RecolorAux>(rec.aux);
  const auto& delta = selection_of(source_w, "recolor push-forward");
  int k = static_cast<int>(aux.c.size());
  std::vector<int> rho(k);
  std::vector<bool> used(k + 1, false);
  for (int i = 0; i < k; ++i) {
    int color = aux.cprime[i][delta[i] - 1];
    if (color == 0 || used[color]) return std::nullopt;  // coloring stars the witness
    used[color] = true;
    rho[i] = color;
  }
  return Witness{PermutationWitness{rho}};
}

Witness pull_back_permis_bpis(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<PermisBpisAux>(rec.aux);
  const auto& rho = std::get<PermutationWitness>(target_w).rho;
  return PermutationWitness{std::vector<int>(rho.begin(), rho.begin() + aux.k)};
}

Witness push_forward_permis_bpis(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<PermisBpisAux>(rec.aux);
  const auto& delta = std::get<PermutationWitness>(source_w).rho;
  std::vector<int> rho(2 * aux.k);
  for (int i = 0; i < aux.k; ++i) {
    rho[i] = delta[i];
    rho[i + aux.k] = delta[i] + aux.k;
  }
  return PermutationWitness{rho};
}

std::vector<int> inverse_permutation(const std::vector<int>& rho, const char* who) {
  int n = static_cast<int>(rho.size());
  std::vector<int> inv(n, 0);
  for (int i = 1; i <= n; ++i) {
    int v = rho[i - 1];
    if (v < 1 || v > n || inv[v - 1] != 0)
      fail("ExtractionFailed", std::string(who) + ": selection is not a permutation");
    inv[v - 1] = i;
  }
  return inv;
}

Witness pull_back_bpis_hs(const ReductionRecord& rec, const Witness& target_w) {
  (void)rec;
  const auto& tau = std::get<RowSelectionWitness>(target_w).rho;
  return PermutationWitness{inverse_permutation(tau, "bpis_to_hs pull-back")};
}

Witness push_forward_bpis_hs(const ReductionRecord& rec, const Witness& source_w) {
  (void)rec;
  const auto& delta = std::get<PermutationWitness>(source_w).rho;
  return RowSelectionWitness{inverse_permutation(delta, "bpis_to_hs push-forward")};
}

Witness pull_back_hs_cs(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<HsCsAux>(rec.aux);
  const auto& s = std::get<CenterStringWitness>(target_w).s;
  int k = aux.k;
  std::vector<bool> appears(2 * k + 2, false);
  for (int ch : s)
    if (ch <= 2 * k + 1) appears[ch] = true;
  int y = 0;
  for (int cand = k + 1; cand <= 2 * k + 1; ++cand)
    if (!appears[cand]) {
      y = cand;
      break;
    }
  if (y == 0) fail("ExtractionFailed", "no dummy value absent from the center string");
  std::vector<int> rho(k);
  for (int i = 0; i < k; ++i) rho[i] = s[i] <= k ? s[i] : 1;
  return RowSelectionWitness{rho};
}

Witness push_forward_hs_cs(const ReductionRecord& rec, const Witness& source_w) {
  (void)rec;
  const auto& rho = std::get<RowSelectionWitness>(source_w).rho;
  return CenterStringWitness{rho};
}

Witness pull_back_bpis_cp(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<BpisCpAux>(rec.aux);
  const auto& rho = std::get<PermutationWitness>(target_w).rho;
  int side = 2 * aux.k;
  int kprime = 24 * aux.k;
  std::vector<int> position(kprime + 1, 0);
  for (int pos = 1; pos <= kprime; ++pos) position[rho[pos - 1]] = pos;

  std::vector<int> delta(side, 0);
  for (int i = 1; i <= side; ++i) {
    int pos = position[aux.rbar(1, i)];
    for (int offset : {-1, 1}) {
      int neighbor_pos = pos + offset;
      if (neighbor_pos < 1 || neighbor_pos > kprime) continue;
      int e = rho[neighbor_pos - 1];
      if (e > aux.c(1, 0) && e <= aux.c(1, side)) delta[i - 1] = e - aux.c(1, 0);
    }
    if (delta[i - 1] == 0)
      fail("ExtractionFailed", "rbar1_" + std::to_string(i) + " has no c1 neighbor");
  }
  return PermutationWitness{delta};
}

Witness push_forward_bpis_cp(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<BpisCpAux>(rec.aux);
  const auto& delta = std::get<PermutationWitness>(source_w).rho;
  std::vector<int> rho;
  rho.reserve(24 * aux.k);
  for (int ell = 1; ell <= 3; ++ell)
    for (int i = 1; i <= 2 * aux.k; ++i) {
      rho.push_back(aux.r(ell, i));
      rho.push_back(aux.rbar(ell, i));
      rho.push_back(aux.c(ell, delta[i - 1]));
      rho.push_back(aux.cbar(ell, delta[i - 1]));
    }
  return PermutationWitness{rho};
}

Witness pull_back_cp_distortion(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<CpDistortionAux>(rec.aux);
  const auto& g = std::get<LineEmbeddingWitness>(target_w).g;
  int k = aux.k;
  if (aux.m == 0) {
    std::vector<int> identity(k);
    for (int i = 0; i < k; ++i) identity[i] = i + 1;
    return PermutationWitness{identity};
  }
  bool reversed = g[aux.v[0] - 1] > g[aux.v[aux.m] - 1];
  std::vector<std::pair<long long, int>> order;
  for (int j = 0; j < k; ++j) order.push_back({g[aux.u[0][j] - 1], j + 1});
  std::sort(order.begin(), order.end());
  if (reversed) std::reverse(order.begin(), order.end());
  std::vector<int> rho(k);
  for (int j = 0; j < k; ++j) rho[j] = order[j].second;
  return PermutationWitness{rho};
}

Witness push_forward_cp_distortion(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<CpDistortionAux>(rec.aux);
  const auto& inst = std::get<ConstrainedPermutationInstance>(rec.source);
  const auto& rho = std::get<PermutationWitness>(source_w).rho;
  int k = aux.k, m = aux.m, d = aux.d;
  int n = std::get<DistortionInstance>(rec.target).graph.n;
  std::vector<long long> g(n, 0);

  for (int a = 0; a <= d; ++a) g[aux.ca[a] - 1] = a;  // c_a^1 sits at 0
  auto v_pos = [&](int i) { return static_cast<long long>(d + 1) + static_cast<long long>(i) * d; };
  for (int i = 0; i <= m; ++i) g[aux.v[i] - 1] = v_pos(i);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) g[aux.u[i][rho[j] - 1] - 1] = v_pos(i) + 2 * j + 1;
  for (int i = 0; i < m; ++i) {
    int slot = -1;
    for (int j = 0; j + 1 < k; ++j) {
      bool a = std::binary_search(inst.sets[i].begin(), inst.sets[i].end(), rho[j]);
      bool b = std::binary_search(inst.sets[i].begin(), inst.sets[i].end(), rho[j + 1]);
      if (a && b) {
        slot = j;
        break;
      }
    }
    if (slot < 0) fail("InvalidSourceWitness", "permutation misses set " + std::to_string(i + 1));
    g[aux.s[i] - 1] = v_pos(i) + 2 * slot + 2;  // squeezed between the pair
  }
  for (int a = 0; a <= d; ++a) g[aux.cb[a] - 1] = v_pos(m) + (d + 1 - a);
  return LineEmbeddingWitness{g};
}

Witness pull_back_hs_ddp(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<HsDdpAux>(rec.aux);
  const auto& paths = std::get<PathSystemWitness>(target_w).paths;
  int k = aux.k;
  if (aux.m == 0) return RowSelectionWitness{std::vector<int>(k, 1)};
  const auto& g1 = aux.gadgets[0];
  std::vector<int> rho(k, 0);
  for (int i = 0; i < k; ++i) {
    const auto& path = paths[i];  // demand (a_i, c_{i,k}) of gadget 1
    if (path.size() < 2) fail("ExtractionFailed", "degenerate a_i path");
    for (int j = 0; j < k; ++j)
      if (g1.v[i][j] == path[1]) rho[i] = j + 1;
    if (rho[i] == 0) fail("ExtractionFailed", "a_i path does not enter a v cell");
  }
  return RowSelectionWitness{rho};
}

Witness push_forward_hs_ddp(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<HsDdpAux>(rec.aux);
  const auto& inst = std::get<HittingSetInstance>(rec.source);
  const auto& rho = std::get<RowSelectionWitness>(source_w).rho;
  int k = aux.k;
  std::vector<std::vector<int>> paths;
  for (int t = 0; t < aux.m; ++t) {
    const auto& g = aux.gadgets[t];
    for (int i = 0; i < k; ++i) {
      int r = rho[i];  // column of row i+1
      std::vector<int> path{g.a[i], g.v[i][r - 1], g.b[r - 1], g.f[i][r - 1]};
      for (int j = r; j <= k; ++j) {
        path.push_back(g.c[i][j]);
        if (j < k) {
          path.push_back(g.d[i][j]);
          path.push_back(g.vstar[i][j]);
        }
      }
      paths.push_back(path);
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (j + 1 != rho[i]) {
          paths.push_back({g.f1[i][j], g.f[i][j], g.f2[i][j]});
        } else {
          std::vector<int> path{g.f1[i][j], g.c[i][0]};
          for (int jj = 1; jj < j + 1; ++jj) {
            path.push_back(g.d[i][jj - 1]);
            path.push_back(g.vstar[i][jj - 1]);
            path.push_back(g.c[i][jj]);
          }
          path.push_back(g.f2[i][j]);
          paths.push_back(path);
        }
      }
    int hit_row = -1;
    for (int i = 0; i < k && hit_row < 0; ++i)
      if (std::binary_search(inst.sets[t].begin(), inst.sets[t].end(), Cell{i + 1, rho[i]}))
        hit_row = i;
    if (hit_row < 0) fail("InvalidSourceWitness", "selection misses set " + std::to_string(t + 1));
    paths.push_back({g.s, g.d[hit_row][rho[hit_row] - 1], g.t});
  }
  return PathSystemWitness{paths};
}

Witness pull_back_ddp_udp(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<DdpUdpAux>(rec.aux);
  const auto& paths = std::get<PathSystemWitness>(target_w).paths;
  std::map<int, std::pair<int, int>> arc_of;
  for (const auto& [arc, e] : aux.arc_vertex) arc_of[e] = arc;

  std::vector<std::vector<int>> out;
  for (int idx = 0; idx < aux.num_main_demands; ++idx) {
    const auto& path = paths[idx];
    std::vector<int> dpath;
    if (path.empty() || path.front() % 2 != 0)
      fail("ExtractionFailed", "main path does not start at an out vertex");
    dpath.push_back(path.front() / 2);
    for (int v : path) {
      auto it = arc_of.find(v);
      if (it != arc_of.end()) dpath.push_back(it->second.second);
    }
    if (path.back() != 2 * dpath.back() - 1)
      fail("ExtractionFailed", "main path does not end at the demanded in vertex");
    out.push_back(dpath);
  }
  return PathSystemWitness{out};
}

Witness push_forward_ddp_udp(const ReductionRecord& rec, const Witness& source_w) {
  const auto& aux = std::get<DdpUdpAux>(rec.aux);
  const auto& paths = std::get<PathSystemWitness>(source_w).paths;
  std::vector<std::vector<int>> out;
  std::set<int> used_arc_vertices;
  for (const auto& dpath : paths) {
    std::vector<int> path;
    for (size_t i = 0; i < dpath.size(); ++i) {
      if (i == 0)
        path.push_back(2 * dpath[i]);  // source endpoint enters at v_out
      else if (i + 1 == dpath.size())
        path.push_back(2 * dpath[i] - 1);
      else {
        path.push_back(2 * dpath[i] - 1);
        path.push_back(2 * dpath[i]);
      }
      if (i + 1 < dpath.size()) {
        int e = aux.arc_vertex.at({dpath[i], dpath[i + 1]});
        path.push_back(e);
        used_arc_vertices.insert(e);
      }
    }
    out.push_back(path);
  }
  for (const auto& split : aux.splits) {
    int d = static_cast<int>(split.in_order.size());
    int used_index = d + 1;  // none used: every pair leans on its left arc vertex
    for (int i = 0; i < d; ++i)
      if (used_arc_vertices.count(aux.arc_vertex.at({split.in_order[i], split.v})))
        used_index = i + 1;
    for (int i = 1; i <= d - 1; ++i) {
      int lean = i < used_index ? i : i + 1;
      int e = aux.arc_vertex.at({split.in_order[lean - 1], split.v});
      out.push_back({split.vs[i - 1], e, split.vt[i - 1]});
    }
  }
  return PathSystemWitness{out};
}

Witness pull_back_chromatic(const ReductionRecord& rec, const Witness& target_w) {
  const auto& aux = std::get<PermCliqueChromaticAux>(rec.aux);
  const auto& colors = std::get<ColorAssignmentWitness>(target_w).colors;
  int k = aux.k;
  std::vector<int> color_to_index(k + 1, 0);
  for (int j = 1; j <= k; ++j) {
    int c = colors[j - 1];  // a_j
    if (c < 1 || c > k || color_to_index[c] != 0)
      fail("ExtractionFailed", "C_a is not rainbow colored");
    color_to_index[c] = j;
  }
  std::vector<int> rho(k);
  for (int i = 1; i <= k; ++i) rho[i - 1] = color_to_index[colors[k + i - 1]];
  return PermutationWitness{rho};
}

std::optional<Witness> push_forward_chromatic(const ReductionRecord& rec,
                                              const Witness& source_w) {
  const auto& aux = std::get<PermCliqueChromaticAux>(rec.aux);
  const auto& rho = std::get<PermutationWitness>(source_w).rho;
  int k = aux.k;
  int n = std::get<ChromaticInstance>(rec.target).graph.n;
  std::vector<int> colors(n, 0);
  for (int j = 1; j <= k; ++j) colors[j - 1] = j;
  for (int i = 1; i <= k; ++i) colors[k + i - 1] = rho[i - 1];
  for (const auto& [key, w] : aux.w) {
    auto [i, j, x, y] = key;
    int z = 0;
    if (x != rho[i - 1] && x != rho[j - 1]) z = x;
    else if (y != rho[i - 1] && y != rho[j - 1]) z = y;
    if (z == 0) return std::nullopt;  // the audited forward-direction gap
    colors[w - 1] = z;
  }
  return Witness{ColorAssignmentWitness{colors}};
}

}  // namespace

Witness pull_back_witness(const ReductionRecord& rec, const Witness& target_witness) {
  if (!verify_witness(rec.target, target_witness))
    fail("InvalidTargetWitness", "target witness does not verify for rule " + rec.rule);
  if (rec.rule == "sat3_to_3col") return pull_back_sat3(rec, target_witness);
  if (rec.rule == "3col_to_kkclique") return pull_back_kkclique(rec, target_witness);
  if (rec.rule == "recolor") return pull_back_recolor(rec, target_witness);
  if (rec.rule == "complement") return target_witness;
  if (rec.rule == "permis_to_bpis") return pull_back_permis_bpis(rec, target_witness);
  if (rec.rule == "bpis_to_hs") return pull_back_bpis_hs(rec, target_witness);
  if (rec.rule == "hs_to_cs") return pull_back_hs_cs(rec, target_witness);
  if (rec.rule == "bpis_to_cp") return pull_back_bpis_cp(rec, target_witness);
  if (rec.rule == "cp_to_distortion") return pull_back_cp_distortion(rec, target_witness);
  if (rec.rule == "hs_to_ddp") return pull_back_hs_ddp(rec, target_witness);
  if (rec.rule == "ddp_to_udp") return pull_back_ddp_udp(rec, target_witness);
  if (rec.rule == "permclique_to_chromatic") return pull_back_chromatic(rec, target_witness);
  fail("SyntaxError", "unknown rule '" + rec.rule + "'");
}

std::optional<Witness> push_forward_witness(const ReductionRecord& rec,
                                            const Witness& source_witness) {
  if (!verify_witness(rec.source, source_witness))
    fail("InvalidSourceWitness", "source witness does not verify for rule " + rec.rule);
  if (rec.rule == "sat3_to_3col") return push_forward_sat3(rec, source_witness);
  if (rec.rule == "3col_to_kkclique") return push_forward_kkclique(rec, source_witness);
  if (rec.rule == "recolor") return push_forward_recolor(rec, source_witness);
  if (rec.rule == "complement") return source_witness;
  if (rec.rule == "permis_to_bpis") return push_forward_permis_bpis(rec, source_witness);
  if (rec.rule == "bpis_to_hs") return push_forward_bpis_hs(rec, source_witness);
  if (rec.rule == "hs_to_cs") return push_forward_hs_cs(rec, source_witness);
  if (rec.rule == "bpis_to_cp") return push_forward_bpis_cp(rec, source_witness);
  if (rec.rule == "cp_to_distortion") return push_forward_cp_distortion(rec, source_witness);
  if (rec.rule == "hs_to_ddp") return push_forward_hs_ddp(rec, source_witness);
  if (rec.rule == "ddp_to_udp") return push_forward_ddp_udp(rec, source_witness);
  if (rec.rule == "permclique_to_chromatic") return push_forward_chromatic(rec, source_witness);
  fail("SyntaxError", "unknown rule '" + rec.rule + "'");
}

}  // namespace superexp

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superexp/hashing.hpp"
#include "superexp/instances.hpp"

namespace superexp {

// Row-major k x k coloring, values in [k] (or [k+1] when a family member is
// used; color k+1 marks never-selected cells).
using TableColoring = std::vector<std::vector<int>>;

// ---- per-rule auxiliary mapping data ----------------------------------------

struct Sat3ColAux {
  int num_vars = 0;
  int num_clauses = 0;
  // Vertex ids: T=1, F=2, B=3; variable i: positive 2i+2, negated 2i+3;
  // clause j (0-based): 5 gadget vertices starting at gadget_base(j).
  int var_pos(int i) const { return 2 * i + 2; }
  int var_neg(int i) const { return 2 * i + 3; }
  int gadget_base(int clause_index) const { return 3 + 2 * num_vars + 5 * clause_index + 1; }
};

struct KkCliqueAux {
  int k = 0;
  std::vector<std::vector<int>> groups;                     // X_1..X_k, vertex ids
  std::vector<std::vector<std::vector<int>>> colorings;     // [group][index][pos] (colors 1..3)
};

struct RecolorAux {
  TableColoring c;       // original coloring
  TableColoring cprime;  // 0 encodes the clash marker
};

struct ComplementAux {};

struct PermisBpisAux {
  int k = 0;
};

struct BpisHsAux {
  int k = 0;  // BPIS parameter; the hitting-set table side is 2k
};

struct HsCsAux {
  int k = 0;
  int m = 0;
};

struct BpisCpAux {
  int k = 0;
  // Element ids in [24k]; indices are 1-based in [3] x [2k].
  int r(int ell, int i) const { return (ell - 1) * 8 * k + i; }
  int rbar(int ell, int i) const { return (ell - 1) * 8 * k + 2 * k + i; }
  int c(int ell, int j) const { return (ell - 1) * 8 * k + 4 * k + j; }
  int cbar(int ell, int j) const { return (ell - 1) * 8 * k + 6 * k + j; }
};

struct CpDistortionAux {
  int k = 0;  // CP ground-set size
  int m = 0;
  int d = 0;  // 2k
  std::vector<std::vector<int>> u;  // u[i-1][j-1]
  std::vector<int> s;               // s[i-1]
  std::vector<int> ca, cb;          // ca[a-1] = c_a^a
  std::vector<int> v;               // v[i-1], i in [m+1]
};

struct HsDdpAux {
  int k = 0;
  int m = 0;
  // Vertex ids per gadget t in [m] (v of gadget t+1 aliases vstar of t).
  struct Gadget {
    std::vector<int> a, b;                    // [k]
    std::vector<std::vector<int>> v, vstar;   // [k][k]
    std::vector<std::vector<int>> c;          // [k][k+1], c[i-1][j] = c_{i,j}
    std::vector<std::vector<int>> d;          // [k][k]
    std::vector<std::vector<int>> f, f1, f2;  // [k][k]
    int s = 0, t = 0;
  };
  std::vector<Gadget> gadgets;
};

struct DdpUdpAux {
  int source_n = 0;
  // Split and arc vertices: v_in = 2v-1, v_out = 2v; e[(u,v)] = arc vertex.
  std::map<std::pair<int, int>, int> arc_vertex;
  // Per vertex v with indegree >= 2: in-neighbors ordered by last-bag index,
  // and the v^s_i / v^t_i ids (parallel vectors of size indegree-1).
  struct SplitDemands {
    int v = 0;
    std::vector<int> in_order;  // tails u_1..u_d in r(e_{u_i v}) order
    std::vector<int> vs, vt;
  };
  std::vector<SplitDemands> splits;
  int num_main_demands = 0;
};

struct PermCliqueChromaticAux {
  int k = 0;
  // w vertex ids keyed by (i, j, x, y) with i < j, x != y.
  std::map<std::tuple<int, int, int, int>, int> w;
};

using AuxData = std::variant<Sat3ColAux, KkCliqueAux, RecolorAux, ComplementAux, PermisBpisAux,
                             BpisHsAux, HsCsAux, BpisCpAux, CpDistortionAux, HsDdpAux, DdpUdpAux,
                             PermCliqueChromaticAux>;

// A reduction application: target instance plus everything needed to run the
// witness mappings deterministically.
struct ReductionRecord {
  std::string rule;
  ProblemInstance source;
  ProblemInstance target;
  AuxData aux;
};

// ---- rules -------------------------------------------------------------------

// CLI rule names, in pipeline order.
inline constexpr const char* kRuleNames[] = {
    "sat3_to_3col",   "3col_to_kkclique", "recolor",         "derand_recolor",
    "complement",     "permis_to_bpis",   "bpis_to_hs",      "hs_to_cs",
    "bpis_to_cp",     "cp_to_distortion", "hs_to_ddp",       "ddp_to_udp",
    "permclique_to_chromatic"};

ReductionRecord sat3_to_3col(const CnfFormula& f);

// Smallest k with 3^ceil(n/k) <= k.
int smallest_clique_side(int n);
ReductionRecord threecol_to_kkclique(const SimpleGraph& g, int k);

// Each cell independent uniform over [k], drawn row-major from SplitMix64(seed).
TableColoring sample_random_coloring(int k, std::uint64_t seed);

// Accepts colors in [k+1]; color k+1 is treated as the clash marker.
ReductionRecord recolor_with(const TableGraph& inst, const TableColoring& c);

std::vector<ReductionRecord> kkclique_to_perm_derandomized(const TableGraph& inst,
                                                           const ColoringFamily& family);

// PermutationClique <-> PermutationIndependentSet; all cross-cell pairs flip.
TableGraph complement_table_graph(const TableGraph& inst);
ReductionRecord complement_record(const TableGraph& inst);

ReductionRecord permis_to_bpis(const TableGraph& inst);
ReductionRecord bpis_to_hitting_set(const TableGraph& inst);
ReductionRecord hitting_set_to_closest_string(const HittingSetInstance& inst);
ReductionRecord bpis_to_constrained_permutation(const TableGraph& inst);
ReductionRecord constrained_permutation_to_distortion(const ConstrainedPermutationInstance& inst);
ReductionRecord hitting_set_to_directed_disjoint_paths(const HittingSetInstance& inst);
ReductionRecord directed_dp_to_undirected_dp(const DisjointPathsInstance& inst);
ReductionRecord perm_clique_to_chromatic(const TableGraph& inst);

// Reverse witness extraction following the proof's rule for rec.rule.
// Requires a verified target witness; throws ExtractionFailed when the
// extraction rule does not apply (a logged soundness counterexample).
Witness pull_back_witness(const ReductionRecord& rec, const Witness& target_witness);

// Forward witness construction; nullopt = NotApplicable (recoloring rules
// whose coloring stars the witness).
std::optional<Witness> push_forward_witness(const ReductionRecord& rec,
                                            const Witness& source_witness);

}  // namespace superexp

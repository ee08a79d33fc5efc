#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superexp {

// Explicit (n,k)-family: for every k-subset S of [n] some member is injective
// on S. functions[f][x-1] in [k].
struct PerfectHashFamily {
  int n = 0;
  int k = 0;
  std::vector<std::vector<std::uint8_t>> functions;

  int eval(int function_index, int x) const { return functions[function_index][x - 1]; }
};

// Deterministic greedy cover from the seed-0 SplitMix64 stream: candidates are
// kept whenever they separate a not-yet-separated k-subset; the result is
// verified exhaustively over all C(n,k) subsets. Envelope: n <= 64, k <= 6.
PerfectHashFamily build_phf(int n, int k);

// True iff some member of the family is injective on every k-subset; used by
// tests and by build_phf's own exit check.
bool phf_is_perfect(const PerfectHashFamily& family);

// Exact count of t in [p] for which x -> (t*x mod p) mod range_size is
// injective on W. Requires p prime in [n, 2n], W a subset of [n], and
// range_size == 2*|W|^2; asserts count >= ceil(p/2) before returning.
long long fks_count_good_multipliers(int n, int p, const std::vector<int>& W, int range_size);

// k-clique with one vertex per row (in column clique_columns[i-1]) plus edges
// from each clique vertex to every other cell of its row; exactly
// C(k,2) + k(k-1) edges.
struct CactusGridGraph {
  int k = 0;
  std::vector<int> clique_columns;
};

// All k^k cactus-grid graphs, lexicographic by clique_columns. k <= 7.
std::vector<CactusGridGraph> enumerate_cactus_grids(int k);

enum class FamilyVariant { LogLog, Linear };

// Descriptor of one coloring function. columns/counts are the (S, k_1..k_ell)
// tuple; hash_index[j] picks the PHF member used for column columns[j].
// The linear variant adds the prime, the per-column part assignment inside
// its size class, and the multiplier table b[class][part].
struct FamilyDescriptor {
  std::vector<int> columns;
  std::vector<int> counts;
  std::vector<int> hash_index;
  int prime = 0;                                   // linear only
  std::vector<int> part_of_column;                 // linear only, per column
  std::vector<std::vector<int>> multipliers;       // linear only, [class][part]
};

struct ColoringFamilyMember {
  std::vector<std::uint8_t> table;  // row-major k*k, values in [k+1]
  FamilyDescriptor descriptor;
};

struct ColoringFamily {
  int k = 0;
  FamilyVariant variant = FamilyVariant::LogLog;
  std::vector<ColoringFamilyMember> members;

  int color(int member, int row, int col) const {
    return members[member].table[(row - 1) * k + (col - 1)];
  }
};

// All (S, composition, per-column hash) descriptors with the quoted coloring
// rule; off-S columns map to k+1. Envelope: 1 <= k <= 6.
ColoringFamily build_family_loglog(int k);

// FKS range reduction ahead of the per-column hash, with the smallest prime
// p in [k, 2k] and multiplier constant c = 8. Envelope: 1 <= k <= 5.
ColoringFamily build_family_linear(int k);

bool coloring_is_proper_on(const std::vector<std::uint8_t>& table, int k,
                           const CactusGridGraph& g);

// Every cactus-grid graph of order k is properly colored by some member.
bool family_covers_all_cactus_grids(const ColoringFamily& family);

std::string family_descriptor_json(const ColoringFamily& family, int member);

}  // namespace superexp

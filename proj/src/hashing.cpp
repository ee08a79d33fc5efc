#include "superexp/hashing.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "superexp/instances.hpp"
#include "superexp/prng.hpp"

namespace superexp {

namespace {

// Lexicographic k-subset iteration over [n]; callback gets 1-based elements.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i + 1;
  for (;;) {
    f(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

bool separates(const std::vector<std::uint8_t>& f, const std::vector<int>& subset) {
  std::uint64_t seen = 0;
  for (int x : subset) {
    std::uint64_t bit = 1ULL << f[x - 1];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

int smallest_prime_in(int lo, int hi) {
  for (int p = std::max(lo, 2); p <= hi; ++p)
    if (is_prime(p)) return p;
  fail("NotPrime", "no prime in [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
}

}  // namespace

PerfectHashFamily build_phf(int n, int k) {
  if (k < 1 || n < k) fail("EnvelopeExceeded", "need n >= k >= 1");
  if (n > 64 || k > 6)
    fail("EnvelopeExceeded", "build_phf supports n <= 64, k <= 6 (got n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k) + ")");

  PerfectHashFamily family{n, k, {}};
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total = total * (n - i) / (i + 1);

  std::vector<std::uint8_t> covered_flags;
  covered_flags.assign(total, 0);
  std::uint64_t uncovered = total;

  // Greedy cover from the fixed seed-0 stream: keep any candidate separating a
  // not-yet-separated subset. Terminates since some function separates every
  // given subset.
  SplitMix64 rng(0);
  while (uncovered > 0) {
    std::vector<std::uint8_t> candidate(n);
    for (int x = 0; x < n; ++x) candidate[x] = static_cast<std::uint8_t>(rng.below(k) + 1);
    std::uint64_t newly = 0, index = 0;
    for_each_subset(n, k, [&](const std::vector<int>& subset) {
      if (!covered_flags[index] && separates(candidate, subset)) {
        covered_flags[index] = 1;
        ++newly;
      }
      ++index;
    });
    if (newly > 0) {
      family.functions.push_back(std::move(candidate));
      uncovered -= newly;
    }
  }
  return family;
}

bool phf_is_perfect(const PerfectHashFamily& family) {
  bool perfect = true;
  for_each_subset(family.n, family.k, [&](const std::vector<int>& subset) {
    if (!perfect) return;
    bool hit = false;
    for (const auto& f : family.functions)
      if (separates(f, subset)) {
        hit = true;
        break;
      }
    perfect = hit;
  });
  return perfect;
}

long long fks_count_good_multipliers(int n, int p, const std::vector<int>& W, int range_size) {
  if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
  if (p < n || p > 2 * n)
    fail("PrimeOutOfRange", "need n <= p <= 2n, got p=" + std::to_string(p));
  std::vector<int> w = W;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.size() != W.size()) fail("RangeError", "W has repeated elements");
  for (int x : w)
    if (x < 1 || x > n) fail("RangeError", "W is not a subset of [n]");
  int r = static_cast<int>(w.size());
  if (range_size != 2 * r * r)
    fail("RangeError", "range_size must equal 2|W|^2 = " + std::to_string(2 * r * r));

  long long count = 0;
  for (int t = 1; t <= p; ++t) {
    std::uint64_t seen = 0;
    bool injective = true;
    for (int x : w) {
      int image = static_cast<int>((static_cast<long long>(t) * x) % p) % range_size;
      if ((seen >> image) & 1) {
        injective = false;
        break;
      }
      seen |= 1ULL << image;
    }
    if (injective) ++count;
  }
  if (count < (p + 1) / 2)
    fail("InvariantError", "good-multiplier count " + std::to_string(count) +
                               " fell below ceil(p/2); the range-reduction bound failed");
  return count;
}

std::vector<CactusGridGraph> enumerate_cactus_grids(int k) {
  if (k < 1 || k > 7) fail("EnvelopeExceeded", "enumerate_cactus_grids supports k <= 7");
  std::vector<CactusGridGraph> out;
  std::vector<int> cols(k, 1);
  for (;;) {
    out.push_back({k, cols});
    int i = k - 1;
    while (i >= 0 && cols[i] == k) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = 1;
  }
  return out;
}

bool coloring_is_proper_on(const std::vector<std::uint8_t>& table, int k,
                           const CactusGridGraph& g) {
  if (g.k != k) fail("SizeMismatch", "coloring and cactus-grid graph have different k");
  auto color = [&](int i, int j) { return table[(i - 1) * k + (j - 1)]; };
  for (int i1 = 1; i1 <= k; ++i1) {
    int c1 = color(i1, g.clique_columns[i1 - 1]);
    for (int i2 = i1 + 1; i2 <= k; ++i2)
      if (c1 == color(i2, g.clique_columns[i2 - 1])) return false;  // clique edge
    for (int j = 1; j <= k; ++j)
      if (j != g.clique_columns[i1 - 1] && c1 == color(i1, j)) return false;  // row edge
  }
  return true;
}

namespace {

// Compositions of k into exactly ell positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int k, int ell) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts(ell, 1);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == ell - 1) {
      parts[pos] = left;
      out.push_back(parts);
      return;
    }
    for (int v = 1; v <= left - (ell - pos - 1); ++v) {
      parts[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (ell >= 1 && k >= ell) rec(rec, 0, k);
  return out;
}

// All sorted column subsets of [k] of each nonempty size.
std::vector<std::vector<int>> column_subsets(int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> cols;
    for (int c = 1; c <= k; ++c)
      if ((mask >> (c - 1)) & 1) cols.push_back(c);
    out.push_back(cols);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::uint8_t> table_from(int k, const FamilyDescriptor& desc,
                                     const std::vector<PerfectHashFamily>& phf_by_count,
                                     bool linear) {
  std::vector<std::uint8_t> table(k * k, static_cast<std::uint8_t>(k + 1));
  int offset = 0;
  for (size_t j = 0; j < desc.columns.size(); ++j) {
    int col = desc.columns[j];
    int kj = desc.counts[j];
    const PerfectHashFamily& phf = phf_by_count[kj];
    for (int i = 1; i <= k; ++i) {
      int x = i;
      if (linear) {
        // FKS range reduction applied to the row index being hashed.
        int cls = kj == 1 ? 0 : static_cast<int>(std::ceil(std::log2(kj)));
        int b = desc.multipliers[cls][desc.part_of_column[j]];
        x = static_cast<int>((static_cast<long long>(b) * i) % desc.prime);
        x %= 8 * kj * kj;  // no-op whenever 8*kj^2 > p, which holds in-envelope
        x += 1;
      }
      int value = phf.eval(desc.hash_index[j], x) + offset;
      table[(i - 1) * k + (col - 1)] = static_cast<std::uint8_t>(value);
    }
    offset += kj;
  }
  return table;
}

}  // namespace

ColoringFamily build_family_loglog(int k) {
  if (k < 1 || k > 6) fail("EnvelopeExceeded", "build_family_loglog supports 1 <= k <= 6");
  ColoringFamily family{k, FamilyVariant::LogLog, {}};

  std::vector<PerfectHashFamily> phf_by_count(k + 1);
  for (int kj = 1; kj <= k; ++kj) phf_by_count[kj] = build_phf(k, kj);

  for (const auto& cols : column_subsets(k)) {
    int ell = static_cast<int>(cols.size());
    for (const auto& comp : compositions(k, ell)) {
      // Odometer over the per-column hash choices.
      std::vector<int> hash_index(ell, 0);
      for (;;) {
        FamilyDescriptor desc;
        desc.columns = cols;
        desc.counts = comp;
        desc.hash_index = hash_index;
        family.members.push_back(
            {table_from(k, desc, phf_by_count, /*linear=*/false), std::move(desc)});
        int j = ell - 1;
        while (j >= 0 &&
               hash_index[j] + 1 == static_cast<int>(phf_by_count[comp[j]].functions.size()))
          --j;
        if (j < 0) break;
        ++hash_index[j];
        for (int j2 = j + 1; j2 < ell; ++j2) hash_index[j2] = 0;
      }
    }
  }
  return family;
}

ColoringFamily build_family_linear(int k) {
  if (k < 1 || k > 5) fail("EnvelopeExceeded", "build_family_linear supports 1 <= k <= 5");
  ColoringFamily family{k, FamilyVariant::Linear, {}};

  int p = smallest_prime_in(k, 2 * k);
  int q = std::max(1, static_cast<int>(std::ceil(std::log2(k))));
  int num_classes = 1 + std::max(1, static_cast<int>(std::ceil(std::log2(k))));

  // The reachable hash domain is {0..p-1}: the multiplied row index is reduced
  // mod p before the (here vacuous) mod 8*kj^2, so a PHF on [p] is the same
  // function family on every input that can occur.
  std::vector<PerfectHashFamily> phf_by_count(k + 1);
  for (int kj = 1; kj <= std::min(k, p); ++kj) phf_by_count[kj] = build_phf(p, kj);
  if (k > p) fail("EnvelopeExceeded", "no prime covers the hash domain");

  auto class_of = [](int kj) {
    return kj == 1 ? 0 : static_cast<int>(std::ceil(std::log2(kj)));
  };

  for (const auto& cols : column_subsets(k)) {
    int ell = static_cast<int>(cols.size());
    for (const auto& comp : compositions(k, ell)) {
      // Columns per size class.
      std::vector<std::vector<int>> class_members(num_classes);  // indices into cols
      for (int j = 0; j < ell; ++j) class_members[class_of(comp[j])].push_back(j);

      // Enumerate per-class labeled partitions into q parts. Class 0 hashes
      // into a single color, so its partition and multipliers are all
      // equivalent; a single canonical choice is emitted for it.
      std::vector<int> part_of(ell, 0);
      std::vector<std::vector<int>> part_choice(num_classes);
      for (int c = 1; c < num_classes; ++c)
        part_choice[c].assign(class_members[c].size(), 0);

      auto emit_with_multipliers = [&]() {
        // Multipliers only for nonempty (class, part) slots; the rest stay 1.
        std::vector<std::vector<int>> nonempty(num_classes);
        for (int c = 1; c < num_classes; ++c) {
          std::vector<bool> used(q, false);
          for (int idx : part_choice[c]) used[idx] = true;
          for (int a = 0; a < q; ++a)
            if (used[a]) nonempty[c].push_back(a);
        }
        std::vector<std::pair<int, int>> slots;
        for (int c = 1; c < num_classes; ++c)
          for (int a : nonempty[c]) slots.push_back({c, a});

        std::vector<int> mult_digit(slots.size(), 1);
        for (;;) {
          FamilyDescriptor desc;
          desc.columns = cols;
          desc.counts = comp;
          desc.prime = p;
          desc.part_of_column = part_of;
          desc.multipliers.assign(num_classes, std::vector<int>(q, 1));
          for (size_t s = 0; s < slots.size(); ++s)
            desc.multipliers[slots[s].first][slots[s].second] = mult_digit[s];

          // Odometer over per-column hash choices.
          std::vector<int> hash_index(ell, 0);
          for (;;) {
            desc.hash_index = hash_index;
            family.members.push_back(
                {table_from(k, desc, phf_by_count, /*linear=*/true), desc});
            int j = ell - 1;
            while (j >= 0 &&
                   hash_index[j] + 1 == static_cast<int>(phf_by_count[comp[j]].functions.size()))
              --j;
            if (j < 0) break;
            ++hash_index[j];
            for (int j2 = j + 1; j2 < ell; ++j2) hash_index[j2] = 0;
          }

          int s = static_cast<int>(slots.size()) - 1;
          while (s >= 0 && mult_digit[s] == p) --s;
          if (s < 0) break;
          ++mult_digit[s];
          for (size_t s2 = s + 1; s2 < slots.size(); ++s2) mult_digit[s2] = 1;
        }
      };

      auto enumerate_partitions = [&](auto&& self, int c) -> void {
        if (c == num_classes) {
          for (int cc = 1; cc < num_classes; ++cc)
            for (size_t idx = 0; idx < class_members[cc].size(); ++idx)
              part_of[class_members[cc][idx]] = part_choice[cc][idx];
          emit_with_multipliers();
          return;
        }
        if (c == 0 || class_members[c].empty()) {
          self(self, c + 1);
          return;
        }
        auto& choice = part_choice[c];
        std::fill(choice.begin(), choice.end(), 0);
        for (;;) {
          self(self, c + 1);
          int i = static_cast<int>(choice.size()) - 1;
          while (i >= 0 && choice[i] == q - 1) --i;
          if (i < 0) break;
          ++choice[i];
          for (size_t i2 = i + 1; i2 < choice.size(); ++i2) choice[i2] = 0;
        }
      };
      enumerate_partitions(enumerate_partitions, 0);
    }
  }
  return family;
}

bool family_covers_all_cactus_grids(const ColoringFamily& family) {
  for (const auto& grid : enumerate_cactus_grids(family.k)) {
    bool covered = false;
    for (const auto& member : family.members)
      if (coloring_is_proper_on(member.table, family.k, grid)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

std::string family_descriptor_json(const ColoringFamily& family, int member) {
  const FamilyDescriptor& d = family.members[member].descriptor;
  nlohmann::json j;
  j["member"] = member;
  j["columns"] = d.columns;
  j["counts"] = d.counts;
  j["hash_index"] = d.hash_index;
  if (family.variant == FamilyVariant::Linear) {
    j["prime"] = d.prime;
    j["part_of_column"] = d.part_of_column;
    j["multipliers"] = d.multipliers;
  }
  nlohmann::json table = nlohmann::json::array();
  const auto& t = family.members[member].table;
  for (int i = 0; i < family.k; ++i)
    table.push_back(std::vector<int>(t.begin() + i * family.k, t.begin() + (i + 1) * family.k));
  j["table"] = table;
  return j.dump();
}

}  // namespace superexp

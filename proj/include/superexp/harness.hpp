#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superexp/hashing.hpp"
#include "superexp/instances.hpp"
#include "superexp/oracles.hpp"
#include "superexp/prng.hpp"

namespace superexp {

// Size parameters for the random generators; each problem reads the fields it
// needs and enforces its envelope.
struct GenParams {
  int k = 2;
  int m = 2;
  int n = 3;
  int t = 2;               // closest-string count
  int length = 2;          // closest-string L
  int sigma = 2;
  int d = 1;
  int ell = 2;
  int demands = 1;
  double p = 0.5;          // edge probability
  double q = 0.3;          // cell probability
  bool row_restricted = false;
};

// Deterministic in seed; the draw order per problem is documented in
// docs/formats.md.
ProblemInstance gen_random(Problem problem, const GenParams& params, std::uint64_t seed);

struct FuzzCase {
  std::uint64_t trial = 0;
  std::uint64_t sub_seed = 0;
  std::string source_json;
  std::string target_json;
  std::string detail;
};

struct FuzzReport {
  std::string rule;
  std::uint64_t trials = 0;
  std::uint64_t agreements = 0;
  std::uint64_t budget_exceeded = 0;
  std::vector<FuzzCase> disagreements;
  std::vector<FuzzCase> audit_findings;  // rule permclique_to_chromatic only

  bool consistent() const {
    return trials == agreements + disagreements.size() + budget_exceeded + audit_findings.size();
  }
};

// Per trial: generate a source instance from mix(seed, trial), reduce, solve
// both sides, compare; on target-Yes additionally pull back and verify; on
// source-Yes also push forward and verify where the rule supports it.
FuzzReport fuzz_equivalence(const std::string& rule, const GenParams& params,
                            std::uint64_t trials, std::uint64_t seed,
                            std::uint64_t budget = kDefaultNodeBudget);

std::string fuzz_report_csv(const FuzzReport& report);

struct Rational {
  long long num = 0;
  long long den = 1;

  void reduce();
  bool operator==(const Rational&) const = default;
};

// Exact probability that events (1) and (2) of the randomized recoloring hold
// for the identity witness under a uniform coloring, by enumeration of all
// k^(k^2) colorings. k <= 3.
Rational perm_success_probability_exact(int k);

// The closed form k!/k^k * (1-1/k)^(k(k-1)) as an exact rational.
Rational perm_success_probability_closed_form(int k);

// Monte Carlo estimate over `samples` seeded colorings.
double perm_success_probability_montecarlo(int k, std::uint64_t samples, std::uint64_t seed);

struct BenchRow {
  std::string problem;
  int size = 0;
  std::uint64_t nodes_explored = 0;
  double wall_time_seconds = 0.0;
  std::string outcome;
};

// Fixed-seed growth measurements on edgeless (worst-case) instances.
std::vector<BenchRow> bench_growth(Problem problem, int size_from, int size_to,
                                   std::uint64_t budget, int repetitions);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace superexp

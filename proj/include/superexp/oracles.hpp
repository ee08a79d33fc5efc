#pragma once

#include <cstdint>
#include <optional>

#include "superexp/instances.hpp"

namespace superexp {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class Outcome { Yes, No, BudgetExceeded };

std::string outcome_tag(Outcome o);

// A Yes always carries a witness that verify_witness accepts; No is returned
// only after a pruned-complete search. nodes_explored counts backtracking-tree
// node entries, so identical (instance, budget) pairs reproduce it exactly;
// wall_time_seconds is informational only.
struct SolveResult {
  Outcome outcome = Outcome::No;
  std::optional<Witness> witness;
  std::uint64_t nodes_explored = 0;
  double wall_time_seconds = 0.0;
};

// True iff w certifies a yes-answer for inst. Throws KindMismatch when the
// witness variant does not belong to the instance's problem.
bool verify_witness(const ProblemInstance& inst, const Witness& w);

// Exact decision with witness, complete pruned backtracking per problem.
// Tie-breaking is ascending-index everywhere.
SolveResult solve_exhaustive(const ProblemInstance& inst,
                             std::uint64_t budget = kDefaultNodeBudget);

// Gramm-et-al style d-budget branching: candidate starts at s_1; at a node,
// if no string violates the radius return Yes; otherwise branch on the first
// min(d+1, mismatches) mismatch positions of the lowest-index violating
// string, decrementing the remaining budget.
SolveResult solve_closest_string_branching(const ClosestStringInstance& inst,
                                           std::uint64_t budget = kDefaultNodeBudget);

// DFS over left-to-right vertex orderings with positions forced by the
// pushing rule g(v_{i+1}) = g(v_i) + D(v_i, v_{i+1}). Non-contraction is
// re-checked pairwise on accept rather than trusted.
SolveResult solve_distortion_pushing(const DistortionInstance& inst,
                                     std::uint64_t budget = kDefaultNodeBudget);

}  // namespace superexp

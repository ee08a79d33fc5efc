#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace superexp {

// Ordered list of bags over 1-based vertex ids. Valid iff (1) the bags cover
// all vertices, (2) every edge lies inside some bag, (3) each vertex occupies
// a contiguous interval of bags.
struct PathDecomposition {
  std::vector<std::vector<int>> bags;

  // max bag size - 1; -1 for an empty decomposition.
  int width() const;

  bool operator==(const PathDecomposition&) const = default;
};

// Width caps the disjoint-paths reductions assert against.
inline int gadget_chain_width_cap(int k) { return 7 * k + 5; }
inline int vertex_split_width_cap(int input_width) { return 2 * (input_width + 1) + 2; }

struct DecompositionCheck {
  bool ok = false;
  int width = -1;                        // meaningful only when ok
  std::vector<std::string> violations;   // empty when ok
};

DecompositionCheck validate_path_decomposition(
    int num_vertices, const std::vector<std::pair<int, int>>& edges,
    const PathDecomposition& pd);

// Duplicates bags so that every vertex's last-bag index is unique. Width and
// validity are preserved; bag order is preserved (bags only gain shrinking
// duplicates directly after themselves).
PathDecomposition make_last_bags_distinct(const PathDecomposition& pd);

// For each (u, v, w): edge uv of the original graph is replaced in the new
// graph by the two edges u-w, w-v with fresh vertex w. The returned
// decomposition is valid for the subdivided graph and has width at most
// width(pd) + 1. Throws EdgeNotInBag if some uv shares no bag.
PathDecomposition pd_subdivide(const PathDecomposition& pd,
                               const std::vector<std::tuple<int, int, int>>& subdivisions);

// First/last bag index (0-based) per vertex id; -1 when absent.
std::vector<int> first_bag_index(const PathDecomposition& pd, int num_vertices);
std::vector<int> last_bag_index(const PathDecomposition& pd, int num_vertices);

}  // namespace superexp

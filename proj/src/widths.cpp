#include "superexp/widths.hpp"

#include <algorithm>
#include <map>

#include "superexp/instances.hpp"

namespace superexp {

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

std::vector<int> first_bag_index(const PathDecomposition& pd, int num_vertices) {
  std::vector<int> first(num_vertices + 1, -1);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
    for (int x : pd.bags[i])
      if (x >= 1 && x <= num_vertices && first[x] < 0) first[x] = i;
  return first;
}

std::vector<int> last_bag_index(const PathDecomposition& pd, int num_vertices) {
  std::vector<int> last(num_vertices + 1, -1);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
    for (int x : pd.bags[i])
      if (x >= 1 && x <= num_vertices) last[x] = i;
  return last;
}

DecompositionCheck validate_path_decomposition(int num_vertices,
                                               const std::vector<std::pair<int, int>>& edges,
                                               const PathDecomposition& pd) {
  DecompositionCheck result;
  auto& bad = result.violations;

  std::vector<int> first(num_vertices + 1, -1), last(num_vertices + 1, -1);
  std::vector<long long> count(num_vertices + 1, 0);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    for (int x : pd.bags[i]) {
      if (x < 1 || x > num_vertices) {
        bad.push_back("bag " + std::to_string(i + 1) + " contains out-of-range vertex " +
                      std::to_string(x));
        continue;
      }
      if (first[x] < 0) first[x] = i;
      last[x] = i;
      ++count[x];
    }
  }
  for (int x = 1; x <= num_vertices; ++x) {
    if (first[x] < 0) {
      bad.push_back("vertex " + std::to_string(x) + " appears in no bag");
    } else if (count[x] != last[x] - first[x] + 1) {
      bad.push_back("vertex " + std::to_string(x) + " does not occupy a contiguous interval");
    }
  }

  for (auto [u, v] : edges) {
    bool covered = false;
    for (const auto& bag : pd.bags) {
      bool su = false, sv = false;
      for (int x : bag) {
        su |= (x == u);
        sv |= (x == v);
      }
      if (su && sv) {
        covered = true;
        break;
      }
    }
    if (!covered)
      bad.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") lies in no bag");
  }

  result.ok = bad.empty();
  if (result.ok) result.width = pd.width();
  return result;
}

PathDecomposition make_last_bags_distinct(const PathDecomposition& pd) {
  int max_vertex = 0;
  for (const auto& bag : pd.bags)
    for (int x : bag) max_vertex = std::max(max_vertex, x);
  auto last = last_bag_index(pd, max_vertex);

  PathDecomposition out;
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    out.bags.push_back(pd.bags[i]);
    std::vector<int> ending;  // vertices whose interval ends here, ascending
    for (int x : pd.bags[i])
      if (last[x] == i) ending.push_back(x);
    std::sort(ending.begin(), ending.end());
    // Duplicate the bag, dropping the ending vertices one at a time so each
    // gets a unique last index; the final one keeps the last duplicate.
    std::vector<int> bag = pd.bags[i];
    for (int j = 0; j + 1 < static_cast<int>(ending.size()); ++j) {
      bag.erase(std::find(bag.begin(), bag.end(), ending[j]));
      out.bags.push_back(bag);
    }
  }
  return out;
}

PathDecomposition pd_subdivide(const PathDecomposition& pd,
                               const std::vector<std::tuple<int, int, int>>& subdivisions) {
  // Host bag per subdivision: the last bag containing both endpoints.
  std::map<int, std::vector<int>> inserts_after;  // bag index -> new vertices
  for (auto [u, v, w] : subdivisions) {
    int host = -1;
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
      const auto& bag = pd.bags[i];
      bool su = std::find(bag.begin(), bag.end(), u) != bag.end();
      bool sv = std::find(bag.begin(), bag.end(), v) != bag.end();
      if (su && sv) host = i;
    }
    if (host < 0)
      fail("EdgeNotInBag", "edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") shares no bag; cannot place subdivision vertex " +
                               std::to_string(w));
    inserts_after[host].push_back(w);
  }

  PathDecomposition out;
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    out.bags.push_back(pd.bags[i]);
    auto it = inserts_after.find(i);
    if (it == inserts_after.end()) continue;
    for (int w : it->second) {
      std::vector<int> bag = pd.bags[i];
      bag.push_back(w);
      out.bags.push_back(bag);  // one new vertex per duplicated bag: width +1
    }
  }
  return out;
}

}  // namespace superexp

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "superexp/widths.hpp"

namespace superexp {

// Single error type; the code string is the stable, testable part.
// Codes in use: SyntaxError, RangeError, InvariantError, KindMismatch,
// EnvelopeExceeded, ClauseWidth, KTooSmall, SizeMismatch, FlavorMismatch,
// NotRowRestricted, SetOutOfRange, MissingDecomposition, NotPrime,
// PrimeOutOfRange, InvalidTargetWitness, InvalidSourceWitness,
// ExtractionFailed, EdgeNotInBag.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

enum class Problem {
  Sat3,
  ThreeColoring,
  KkClique,
  KkPermClique,
  KkPermIs,
  Bpis,
  HittingSet,
  ClosestString,
  ConstrainedPermutation,
  Distortion,
  DisjointPaths,
  DirectedDisjointPaths,
  Chromatic,
};

std::string problem_tag(Problem p);
Problem problem_from_tag(const std::string& tag);

// 1-based (row, column) table cell.
using Cell = std::pair<int, int>;

enum class TableFlavor {
  Clique,
  PermutationClique,
  PermutationIndependentSet,
  BipartitePermutationIndependentSet,
};

// Graph on a k x k table (2k x 2k for the bipartite flavor). Edges are stored
// canonically: lexicographically smaller cell first, deduplicated, no loops.
struct TableGraph {
  int k = 1;
  TableFlavor flavor = TableFlavor::Clique;
  std::set<std::pair<Cell, Cell>> edges;

  int side_multiplier() const {
    return flavor == TableFlavor::BipartitePermutationIndependentSet ? 2 : 1;
  }
  int side() const { return side_multiplier() * k; }

  void add_edge(Cell a, Cell b);
  bool adjacent(Cell a, Cell b) const;

  bool operator==(const TableGraph&) const = default;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // nonzero literals in +-[num_vars]

  bool operator==(const CnfFormula&) const = default;
};

// Undirected simple graph, vertices 1..n, canonical edge set.
struct SimpleGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;

  bool operator==(const SimpleGraph&) const = default;
};

struct DiGraph {
  int n = 0;
  std::set<std::pair<int, int>> arcs;  // ordered (tail, head), no loops

  void add_arc(int u, int v) { arcs.insert({u, v}); }
  bool has_arc(int u, int v) const { return arcs.count({u, v}) > 0; }

  bool operator==(const DiGraph&) const = default;
};

struct ThreeColoringInstance {
  SimpleGraph graph;

  bool operator==(const ThreeColoringInstance&) const = default;
};

struct HittingSetInstance {
  int k = 1;  // table side; universe is [k] x [k]
  std::vector<std::vector<Cell>> sets;
  bool row_restricted = false;

  // Sorts each set and the set list, keeping duplicates.
  void canonicalize();

  bool operator==(const HittingSetInstance&) const = default;
};

struct ClosestStringInstance {
  int sigma = 1;   // alphabet [sigma]
  int length = 0;  // L
  int d = 0;
  std::vector<std::vector<int>> strings;

  bool operator==(const ClosestStringInstance&) const = default;
};

struct ConstrainedPermutationInstance {
  int kprime = 1;
  std::vector<std::vector<int>> sets;  // subsets of [kprime]
  std::optional<std::map<int, std::string>> element_labels;

  void canonicalize();

  bool operator==(const ConstrainedPermutationInstance&) const = default;
};

struct DistortionInstance {
  SimpleGraph graph;  // must be connected
  int d = 1;

  bool operator==(const DistortionInstance&) const = default;
};

struct DisjointPathsInstance {
  bool directed = false;
  int n = 0;
  // Arcs when directed, canonical undirected edges otherwise.
  std::set<std::pair<int, int>> links;
  std::vector<std::pair<int, int>> demands;  // order is semantic
  std::optional<PathDecomposition> decomposition;

  void add_link(int u, int v);
  bool linked(int u, int v) const;  // respects orientation when directed
  std::vector<std::pair<int, int>> undirected_edges() const;

  bool operator==(const DisjointPathsInstance&) const = default;
};

struct ChromaticInstance {
  SimpleGraph graph;
  std::set<int> vertex_cover;
  int ell = 1;

  bool operator==(const ChromaticInstance&) const = default;
};

using ProblemInstance =
    std::variant<CnfFormula, ThreeColoringInstance, TableGraph, HittingSetInstance,
                 ClosestStringInstance, ConstrainedPermutationInstance, DistortionInstance,
                 DisjointPathsInstance, ChromaticInstance>;

Problem problem_of(const ProblemInstance& inst);

// ---- witnesses ------------------------------------------------------------

struct RowSelectionWitness {
  std::vector<int> rho;  // rho[i-1] = selected column of row i
  bool operator==(const RowSelectionWitness&) const = default;
};
struct PermutationWitness {
  std::vector<int> rho;  // bijection on [side]
  bool operator==(const PermutationWitness&) const = default;
};
struct CenterStringWitness {
  std::vector<int> s;
  bool operator==(const CenterStringWitness&) const = default;
};
struct LineEmbeddingWitness {
  std::vector<long long> g;  // g[v-1] = integer position of vertex v
  bool operator==(const LineEmbeddingWitness&) const = default;
};
struct PathSystemWitness {
  std::vector<std::vector<int>> paths;  // one vertex sequence per demand
  bool operator==(const PathSystemWitness&) const = default;
};
struct ColorAssignmentWitness {
  std::vector<int> colors;
  bool operator==(const ColorAssignmentWitness&) const = default;
};
struct AssignmentWitness {
  std::vector<bool> values;  // values[i-1] = truth value of variable i
  bool operator==(const AssignmentWitness&) const = default;
};
struct ThreeColoringWitness {
  std::vector<int> colors;  // in [3]
  bool operator==(const ThreeColoringWitness&) const = default;
};

using Witness =
    std::variant<RowSelectionWitness, PermutationWitness, CenterStringWitness,
                 LineEmbeddingWitness, PathSystemWitness, ColorAssignmentWitness,
                 AssignmentWitness, ThreeColoringWitness>;

std::string witness_kind(const Witness& w);

// ---- operations ------------------------------------------------------------

// Accepts the superexp/1 JSON envelope, or DIMACS CNF (for sat3). The result
// is fully validated; every invariant below holds.
ProblemInstance parse_instance(const std::string& bytes);

// Canonical form: sorted keys, canonical edge/set order; parse-serialize is
// the identity on canonical bytes.
std::string serialize_instance(const ProblemInstance& inst);

// Empty iff every type invariant holds; violations name the invariant and the
// offending element.
std::vector<std::string> validate_instance(const ProblemInstance& inst);

Witness parse_witness(const std::string& bytes);
std::string serialize_witness(const Witness& w);

// ---- small graph utilities -------------------------------------------------

// BFS shortest-path distances from src; unreachable = -1.
std::vector<int> bfs_distances(const SimpleGraph& g, int src);
bool is_connected(const SimpleGraph& g);
// All-pairs distance matrix, dist[u-1][v-1]; graph must be connected.
std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g);

}  // namespace superexp

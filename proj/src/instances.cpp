#include "superexp/instances.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace superexp {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "superexp/1";
constexpr const char* kWitnessFormatTag = "superexp-witness/1";

const std::pair<Problem, const char*> kProblemTags[] = {
    {Problem::Sat3, "sat3"},
    {Problem::ThreeColoring, "three_coloring"},
    {Problem::KkClique, "kk_clique"},
    {Problem::KkPermClique, "kk_perm_clique"},
    {Problem::KkPermIs, "kk_perm_is"},
    {Problem::Bpis, "bpis"},
    {Problem::HittingSet, "hitting_set"},
    {Problem::ClosestString, "closest_string"},
    {Problem::ConstrainedPermutation, "constrained_permutation"},
    {Problem::Distortion, "distortion"},
    {Problem::DisjointPaths, "disjoint_paths"},
    {Problem::DirectedDisjointPaths, "directed_disjoint_paths"},
    {Problem::Chromatic, "chromatic"},
};

}  // namespace

std::string problem_tag(Problem p) {
  for (auto [prob, tag] : kProblemTags)
    if (prob == p) return tag;
  fail("SyntaxError", "unknown problem enum value");
}

Problem problem_from_tag(const std::string& tag) {
  for (auto [prob, t] : kProblemTags)
    if (tag == t) return prob;
  fail("SyntaxError", "unknown problem tag '" + tag + "'");
}

void TableGraph::add_edge(Cell a, Cell b) {
  if (a == b) fail("InvariantError", "self-edge on table cell");
  if (b < a) std::swap(a, b);
  edges.insert({a, b});
}

bool TableGraph::adjacent(Cell a, Cell b) const {
  if (b < a) std::swap(a, b);
  return edges.count({a, b}) > 0;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) fail("InvariantError", "self-edge");
  if (v < u) std::swap(u, v);
  edges.insert({u, v});
}

bool SimpleGraph::adjacent(int u, int v) const {
  if (v < u) std::swap(u, v);
  return edges.count({u, v}) > 0;
}

void HittingSetInstance::canonicalize() {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end());
}

void ConstrainedPermutationInstance::canonicalize() {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end());
}

void DisjointPathsInstance::add_link(int u, int v) {
  if (u == v) fail("InvariantError", "self-link");
  if (!directed && v < u) std::swap(u, v);
  links.insert({u, v});
}

bool DisjointPathsInstance::linked(int u, int v) const {
  if (directed) return links.count({u, v}) > 0;
  if (v < u) std::swap(u, v);
  return links.count({u, v}) > 0;
}

std::vector<std::pair<int, int>> DisjointPathsInstance::undirected_edges() const {
  std::set<std::pair<int, int>> out;
  for (auto [u, v] : links) out.insert({std::min(u, v), std::max(u, v)});
  return {out.begin(), out.end()};
}

Problem problem_of(const ProblemInstance& inst) {
  struct Visitor {
    Problem operator()(const CnfFormula&) { return Problem::Sat3; }
    Problem operator()(const ThreeColoringInstance&) { return Problem::ThreeColoring; }
    Problem operator()(const TableGraph& t) {
      switch (t.flavor) {
        case TableFlavor::Clique: return Problem::KkClique;
        case TableFlavor::PermutationClique: return Problem::KkPermClique;
        case TableFlavor::PermutationIndependentSet: return Problem::KkPermIs;
        case TableFlavor::BipartitePermutationIndependentSet: return Problem::Bpis;
      }
      fail("SyntaxError", "bad flavor");
    }
    Problem operator()(const HittingSetInstance&) { return Problem::HittingSet; }
    Problem operator()(const ClosestStringInstance&) { return Problem::ClosestString; }
    Problem operator()(const ConstrainedPermutationInstance&) {
      return Problem::ConstrainedPermutation;
    }
    Problem operator()(const DistortionInstance&) { return Problem::Distortion; }
    Problem operator()(const DisjointPathsInstance& d) {
      return d.directed ? Problem::DirectedDisjointPaths : Problem::DisjointPaths;
    }
    Problem operator()(const ChromaticInstance&) { return Problem::Chromatic; }
  };
  return std::visit(Visitor{}, inst);
}

std::string witness_kind(const Witness& w) {
  struct Visitor {
    std::string operator()(const RowSelectionWitness&) { return "row_selection"; }
    std::string operator()(const PermutationWitness&) { return "permutation"; }
    std::string operator()(const CenterStringWitness&) { return "center_string"; }
    std::string operator()(const LineEmbeddingWitness&) { return "line_embedding"; }
    std::string operator()(const PathSystemWitness&) { return "path_system"; }
    std::string operator()(const ColorAssignmentWitness&) { return "color_assignment"; }
    std::string operator()(const AssignmentWitness&) { return "assignment"; }
    std::string operator()(const ThreeColoringWitness&) { return "three_coloring"; }
  };
  return std::visit(Visitor{}, w);
}

// ---- validation --------------------------------------------------------------

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
}

void validate_table(const TableGraph& t, std::vector<std::string>& out) {
  if (t.k < 1) out.push_back("k must be positive");
  int side = t.side();
  for (const auto& [a, b] : t.edges) {
    if (a.first < 1 || a.first > side || a.second < 1 || a.second > side ||
        b.first < 1 || b.first > side || b.second < 1 || b.second > side) {
      out.push_back("edge " + cell_str(a) + "-" + cell_str(b) + " out of range");
      continue;
    }
    if (a == b) out.push_back("self-edge at " + cell_str(a));
    if (b < a) out.push_back("edge " + cell_str(a) + "-" + cell_str(b) + " not canonical");
    if (t.flavor == TableFlavor::BipartitePermutationIndependentSet) {
      auto in_i1 = [&](Cell c) { return c.first <= t.k && c.second <= t.k; };
      auto in_i2 = [&](Cell c) { return c.first > t.k && c.second > t.k; };
      bool ok = (in_i1(a) && in_i2(b)) || (in_i1(b) && in_i2(a));
      if (!ok)
        out.push_back("bpis edge " + cell_str(a) + "-" + cell_str(b) +
                      " does not join I1 to I2");
    }
  }
}

void validate_cnf(const CnfFormula& f, std::vector<std::string>& out) {
  if (f.num_vars < 0) out.push_back("num_vars must be nonnegative");
  for (size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& cl = f.clauses[i];
    if (cl.empty()) out.push_back("clause " + std::to_string(i + 1) + " is empty");
    if (cl.size() > 3) out.push_back("clause " + std::to_string(i + 1) + " wider than 3");
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > f.num_vars)
        out.push_back("clause " + std::to_string(i + 1) + " has literal " +
                      std::to_string(lit) + " out of range");
  }
}

void validate_simple_graph(const SimpleGraph& g, std::vector<std::string>& out) {
  if (g.n < 0) out.push_back("num_vertices must be nonnegative");
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.n || v > g.n)
      out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    else if (u == v)
      out.push_back("self-edge at " + std::to_string(u));
    else if (v < u)
      out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not canonical");
  }
}

void validate_hitting_set(const HittingSetInstance& h, std::vector<std::string>& out) {
  if (h.k < 1) out.push_back("k must be positive");
  for (size_t x = 0; x < h.sets.size(); ++x) {
    std::vector<int> rows_seen;
    for (Cell c : h.sets[x]) {
      if (c.first < 1 || c.first > h.k || c.second < 1 || c.second > h.k)
        out.push_back("set " + std::to_string(x + 1) + " cell " + cell_str(c) + " out of range");
      else
        rows_seen.push_back(c.first);
    }
    if (h.row_restricted) {
      std::sort(rows_seen.begin(), rows_seen.end());
      if (std::adjacent_find(rows_seen.begin(), rows_seen.end()) != rows_seen.end())
        out.push_back("set " + std::to_string(x + 1) +
                      " touches some row twice but row_restricted is set");
    }
  }
}

void validate_closest_string(const ClosestStringInstance& c, std::vector<std::string>& out) {
  if (c.sigma < 1) out.push_back("sigma must be positive");
  if (c.length < 0) out.push_back("length must be nonnegative");
  if (c.d < 0) out.push_back("d must be nonnegative");
  for (size_t i = 0; i < c.strings.size(); ++i) {
    if (static_cast<int>(c.strings[i].size()) != c.length)
      out.push_back("string " + std::to_string(i + 1) + " has wrong length");
    for (int ch : c.strings[i])
      if (ch < 1 || ch > c.sigma)
        out.push_back("string " + std::to_string(i + 1) + " has character " +
                      std::to_string(ch) + " outside the alphabet");
  }
}

// Canonical labels for the 24k structured element names, ell in [3].
std::string cp_label_r(int ell, int i) { return "r" + std::to_string(ell) + "_" + std::to_string(i); }
std::string cp_label_rb(int ell, int i) { return "rb" + std::to_string(ell) + "_" + std::to_string(i); }
std::string cp_label_c(int ell, int j) { return "c" + std::to_string(ell) + "_" + std::to_string(j); }
std::string cp_label_cb(int ell, int j) { return "cb" + std::to_string(ell) + "_" + std::to_string(j); }

void validate_cp(const ConstrainedPermutationInstance& c, std::vector<std::string>& out) {
  if (c.kprime < 1) out.push_back("kprime must be positive");
  for (size_t i = 0; i < c.sets.size(); ++i)
    for (int e : c.sets[i])
      if (e < 1 || e > c.kprime)
        out.push_back("set " + std::to_string(i + 1) + " element " + std::to_string(e) +
                      " out of range");
  if (c.element_labels) {
    if (c.kprime % 24 != 0) {
      out.push_back("element_labels present but kprime is not 24k");
      return;
    }
    int k2 = c.kprime / 12;  // 2k
    std::set<std::string> expected;
    for (int ell = 1; ell <= 3; ++ell)
      for (int i = 1; i <= k2; ++i) {
        expected.insert(cp_label_r(ell, i));
        expected.insert(cp_label_rb(ell, i));
        expected.insert(cp_label_c(ell, i));
        expected.insert(cp_label_cb(ell, i));
      }
    std::set<std::string> got;
    for (const auto& [e, name] : *c.element_labels) {
      if (e < 1 || e > c.kprime)
        out.push_back("label key " + std::to_string(e) + " out of range");
      got.insert(name);
    }
    if (c.element_labels->size() != static_cast<size_t>(c.kprime) || got != expected)
      out.push_back("element_labels is not a bijection onto the 24k structured names");
  }
}

void validate_distortion(const DistortionInstance& d, std::vector<std::string>& out) {
  validate_simple_graph(d.graph, out);
  if (d.d < 1) out.push_back("d must be at least 1");
  if (d.graph.n < 1)
    out.push_back("graph is empty");
  else if (!is_connected(d.graph))
    out.push_back("graph is disconnected");
}

void validate_disjoint_paths(const DisjointPathsInstance& d, std::vector<std::string>& out) {
  if (d.n < 0) out.push_back("num_vertices must be nonnegative");
  for (auto [u, v] : d.links) {
    if (u < 1 || v < 1 || u > d.n || v > d.n)
      out.push_back("link (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    else if (u == v)
      out.push_back("self-link at " + std::to_string(u));
    else if (!d.directed && v < u)
      out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not canonical");
  }
  std::set<int> terminals;
  for (auto [s, t] : d.demands) {
    if (s < 1 || s > d.n || t < 1 || t > d.n) {
      out.push_back("demand (" + std::to_string(s) + "," + std::to_string(t) + ") out of range");
      continue;
    }
    if (s == t) out.push_back("demand with equal endpoints " + std::to_string(s));
    if (!terminals.insert(s).second || !terminals.insert(t).second)
      out.push_back("demand terminals not distinct");
  }
  if (d.decomposition) {
    std::vector<std::pair<int, int>> edges = d.undirected_edges();
    auto check = validate_path_decomposition(d.n, edges, *d.decomposition);
    for (const auto& v : check.violations) out.push_back("decomposition: " + v);
  }
}

void validate_chromatic(const ChromaticInstance& c, std::vector<std::string>& out) {
  validate_simple_graph(c.graph, out);
  if (c.ell < 1) out.push_back("ell must be positive");
  for (int v : c.vertex_cover)
    if (v < 1 || v > c.graph.n)
      out.push_back("vertex_cover member " + std::to_string(v) + " out of range");
  for (auto [u, v] : c.graph.edges)
    if (!c.vertex_cover.count(u) && !c.vertex_cover.count(v))
      out.push_back("vertex_cover misses edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
}

}  // namespace

std::vector<std::string> validate_instance(const ProblemInstance& inst) {
  std::vector<std::string> out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CnfFormula>) validate_cnf(v, out);
        else if constexpr (std::is_same_v<T, ThreeColoringInstance>) validate_simple_graph(v.graph, out);
        else if constexpr (std::is_same_v<T, TableGraph>) validate_table(v, out);
        else if constexpr (std::is_same_v<T, HittingSetInstance>) validate_hitting_set(v, out);
        else if constexpr (std::is_same_v<T, ClosestStringInstance>) validate_closest_string(v, out);
        else if constexpr (std::is_same_v<T, ConstrainedPermutationInstance>) validate_cp(v, out);
        else if constexpr (std::is_same_v<T, DistortionInstance>) validate_distortion(v, out);
        else if constexpr (std::is_same_v<T, DisjointPathsInstance>) validate_disjoint_paths(v, out);
        else if constexpr (std::is_same_v<T, ChromaticInstance>) validate_chromatic(v, out);
      },
      inst);
  return out;
}

// ---- JSON helpers --------------------------------------------------------------

namespace {

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail("SyntaxError", std::string("missing field '") + key + "'");
  return *it;
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) fail("SyntaxError", std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

bool need_bool(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_boolean()) fail("SyntaxError", std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail("SyntaxError", std::string(what) + " must be an integer");
  return v.get<int>();
}

Cell parse_cell(const json& v, int side) {
  if (!v.is_array() || v.size() != 2) fail("SyntaxError", "cell must be a [row,col] pair");
  Cell c{as_int(v[0], "row"), as_int(v[1], "col")};
  if (c.first < 1 || c.first > side || c.second < 1 || c.second > side)
    fail("RangeError", "cell " + cell_str(c) + " outside [" + std::to_string(side) + "]^2");
  return c;
}

int parse_vertex(const json& v, int n) {
  int x = as_int(v, "vertex");
  if (x < 1 || x > n) fail("RangeError", "vertex " + std::to_string(x) + " out of range");
  return x;
}

json cell_json(Cell c) { return json::array({c.first, c.second}); }

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula f;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream h(line);
      std::string p, fmt;
      int n = 0, m = 0;
      if (!(h >> p >> fmt >> n >> m) || fmt != "cnf")
        fail("SyntaxError", "bad DIMACS header");
      f.num_vars = n;
      header = true;
      continue;
    }
    if (!header) fail("SyntaxError", "DIMACS clause before header");
    std::istringstream body(line);
    int lit;
    while (body >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        if (std::abs(lit) > f.num_vars)
          fail("RangeError", "literal " + std::to_string(lit) + " out of range");
        current.push_back(lit);
      }
    }
  }
  if (!header) fail("SyntaxError", "not a DIMACS file");
  if (!current.empty()) f.clauses.push_back(current);
  return f;
}

}  // namespace

ProblemInstance parse_instance(const std::string& bytes) {
  size_t pos = bytes.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) fail("SyntaxError", "empty input");

  ProblemInstance inst;
  if (bytes[pos] != '{') {
    inst = parse_dimacs(bytes);
  } else {
    json j;
    try {
      j = json::parse(bytes);
    } catch (const json::exception& e) {
      fail("SyntaxError", e.what());
    }
    if (!j.is_object()) fail("SyntaxError", "envelope must be a JSON object");
    if (j.contains("format") && j["format"] != kFormatTag)
      fail("SyntaxError", "unknown format tag");
    Problem problem = problem_from_tag(need(j, "problem").get<std::string>());

    switch (problem) {
      case Problem::Sat3: {
        CnfFormula f;
        f.num_vars = need_int(j, "num_vars");
        for (const json& cl : need(j, "clauses")) {
          std::vector<int> clause;
          for (const json& lit : cl) {
            int l = as_int(lit, "literal");
            if (l == 0 || std::abs(l) > f.num_vars)
              fail("RangeError", "literal " + std::to_string(l) + " out of range");
            clause.push_back(l);
          }
          f.clauses.push_back(clause);
        }
        inst = f;
        break;
      }
      case Problem::ThreeColoring: {
        ThreeColoringInstance t;
        t.graph.n = need_int(j, "num_vertices");
        for (const json& e : need(j, "edges"))
          t.graph.add_edge(parse_vertex(e.at(0), t.graph.n), parse_vertex(e.at(1), t.graph.n));
        inst = t;
        break;
      }
      case Problem::KkClique:
      case Problem::KkPermClique:
      case Problem::KkPermIs:
      case Problem::Bpis: {
        TableGraph t;
        t.k = need_int(j, "k");
        if (t.k < 1) fail("RangeError", "k must be positive");
        t.flavor = problem == Problem::KkClique        ? TableFlavor::Clique
                   : problem == Problem::KkPermClique  ? TableFlavor::PermutationClique
                   : problem == Problem::KkPermIs      ? TableFlavor::PermutationIndependentSet
                                                       : TableFlavor::BipartitePermutationIndependentSet;
        for (const json& e : need(j, "edges")) {
          if (!e.is_array() || e.size() != 2) fail("SyntaxError", "edge must be a pair of cells");
          t.add_edge(parse_cell(e[0], t.side()), parse_cell(e[1], t.side()));
        }
        inst = t;
        break;
      }
      case Problem::HittingSet: {
        HittingSetInstance h;
        h.k = need_int(j, "k");
        if (h.k < 1) fail("RangeError", "k must be positive");
        h.row_restricted = need_bool(j, "row_restricted");
        for (const json& s : need(j, "sets")) {
          std::vector<Cell> set;
          for (const json& c : s) set.push_back(parse_cell(c, h.k));
          h.sets.push_back(set);
        }
        h.canonicalize();
        inst = h;
        break;
      }
      case Problem::ClosestString: {
        ClosestStringInstance c;
        c.sigma = need_int(j, "sigma");
        c.length = need_int(j, "length");
        c.d = need_int(j, "d");
        for (const json& s : need(j, "strings")) {
          std::vector<int> str;
          for (const json& ch : s) {
            int x = as_int(ch, "character");
            if (x < 1 || x > c.sigma) fail("RangeError", "character out of alphabet");
            str.push_back(x);
          }
          c.strings.push_back(str);
        }
        inst = c;
        break;
      }
      case Problem::ConstrainedPermutation: {
        ConstrainedPermutationInstance c;
        c.kprime = need_int(j, "kprime");
        if (c.kprime < 1) fail("RangeError", "kprime must be positive");
        for (const json& s : need(j, "sets")) {
          std::vector<int> set;
          for (const json& e : s) {
            int x = as_int(e, "element");
            if (x < 1 || x > c.kprime) fail("RangeError", "element out of range");
            set.push_back(x);
          }
          c.sets.push_back(set);
        }
        c.canonicalize();
        if (j.contains("element_labels")) {
          std::map<int, std::string> labels;
          for (auto it = j["element_labels"].begin(); it != j["element_labels"].end(); ++it)
            labels[std::stoi(it.key())] = it.value().get<std::string>();
          c.element_labels = labels;
        }
        inst = c;
        break;
      }
      case Problem::Distortion: {
        DistortionInstance d;
        d.graph.n = need_int(j, "num_vertices");
        d.d = need_int(j, "d");
        for (const json& e : need(j, "edges"))
          d.graph.add_edge(parse_vertex(e.at(0), d.graph.n), parse_vertex(e.at(1), d.graph.n));
        inst = d;
        break;
      }
      case Problem::DisjointPaths:
      case Problem::DirectedDisjointPaths: {
        DisjointPathsInstance d;
        d.directed = (problem == Problem::DirectedDisjointPaths);
        d.n = need_int(j, "num_vertices");
        for (const json& e : need(j, d.directed ? "arcs" : "edges"))
          d.add_link(parse_vertex(e.at(0), d.n), parse_vertex(e.at(1), d.n));
        for (const json& e : need(j, "demands"))
          d.demands.push_back({parse_vertex(e.at(0), d.n), parse_vertex(e.at(1), d.n)});
        if (j.contains("decomposition")) {
          PathDecomposition pd;
          for (const json& bag : need(j["decomposition"], "bags")) {
            std::vector<int> b;
            for (const json& v : bag) b.push_back(parse_vertex(v, d.n));
            pd.bags.push_back(b);
          }
          d.decomposition = pd;
        }
        inst = d;
        break;
      }
      case Problem::Chromatic: {
        ChromaticInstance c;
        c.graph.n = need_int(j, "num_vertices");
        c.ell = need_int(j, "ell");
        for (const json& e : need(j, "edges"))
          c.graph.add_edge(parse_vertex(e.at(0), c.graph.n), parse_vertex(e.at(1), c.graph.n));
        for (const json& v : need(j, "vertex_cover")) c.vertex_cover.insert(parse_vertex(v, c.graph.n));
        inst = c;
        break;
      }
    }
  }

  auto violations = validate_instance(inst);
  if (!violations.empty()) fail("InvariantError", violations.front());
  return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
  json j;
  j["format"] = kFormatTag;
  j["problem"] = problem_tag(problem_of(inst));
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CnfFormula>) {
          j["num_vars"] = v.num_vars;
          j["clauses"] = v.clauses;
        } else if constexpr (std::is_same_v<T, ThreeColoringInstance>) {
          j["num_vertices"] = v.graph.n;
          j["edges"] = json::array();
          for (auto [a, b] : v.graph.edges) j["edges"].push_back({a, b});
        } else if constexpr (std::is_same_v<T, TableGraph>) {
          j["k"] = v.k;
          j["edges"] = json::array();
          for (const auto& [a, b] : v.edges)
            j["edges"].push_back(json::array({cell_json(a), cell_json(b)}));
        } else if constexpr (std::is_same_v<T, HittingSetInstance>) {
          HittingSetInstance h = v;
          h.canonicalize();
          j["k"] = h.k;
          j["row_restricted"] = h.row_restricted;
          j["sets"] = json::array();
          for (const auto& s : h.sets) {
            json set = json::array();
            for (Cell c : s) set.push_back(cell_json(c));
            j["sets"].push_back(set);
          }
        } else if constexpr (std::is_same_v<T, ClosestStringInstance>) {
          j["sigma"] = v.sigma;
          j["length"] = v.length;
          j["d"] = v.d;
          j["strings"] = v.strings;
        } else if constexpr (std::is_same_v<T, ConstrainedPermutationInstance>) {
          ConstrainedPermutationInstance c = v;
          c.canonicalize();
          j["kprime"] = c.kprime;
          j["sets"] = c.sets;
          if (c.element_labels) {
            json labels = json::object();
            for (const auto& [e, name] : *c.element_labels) labels[std::to_string(e)] = name;
            j["element_labels"] = labels;
          }
        } else if constexpr (std::is_same_v<T, DistortionInstance>) {
          j["num_vertices"] = v.graph.n;
          j["d"] = v.d;
          j["edges"] = json::array();
          for (auto [a, b] : v.graph.edges) j["edges"].push_back({a, b});
        } else if constexpr (std::is_same_v<T, DisjointPathsInstance>) {
          j["num_vertices"] = v.n;
          j[v.directed ? "arcs" : "edges"] = json::array();
          for (auto [a, b] : v.links) j[v.directed ? "arcs" : "edges"].push_back({a, b});
          j["demands"] = json::array();
          for (auto [s, t] : v.demands) j["demands"].push_back({s, t});
          if (v.decomposition) j["decomposition"] = {{"bags", v.decomposition->bags}};
        } else if constexpr (std::is_same_v<T, ChromaticInstance>) {
          j["num_vertices"] = v.graph.n;
          j["ell"] = v.ell;
          j["edges"] = json::array();
          for (auto [a, b] : v.graph.edges) j["edges"].push_back({a, b});
          j["vertex_cover"] = std::vector<int>(v.vertex_cover.begin(), v.vertex_cover.end());
        }
      },
      inst);
  return j.dump();
}

Witness parse_witness(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    fail("SyntaxError", e.what());
  }
  if (j.contains("format") && j["format"] != kWitnessFormatTag)
    fail("SyntaxError", "unknown witness format tag");
  std::string kind = need(j, "kind").get<std::string>();
  auto ints = [&](const char* key) { return need(j, key).get<std::vector<int>>(); };
  if (kind == "row_selection") return RowSelectionWitness{ints("rho")};
  if (kind == "permutation") return PermutationWitness{ints("rho")};
  if (kind == "center_string") return CenterStringWitness{ints("s")};
  if (kind == "line_embedding")
    return LineEmbeddingWitness{need(j, "g").get<std::vector<long long>>()};
  if (kind == "path_system")
    return PathSystemWitness{need(j, "paths").get<std::vector<std::vector<int>>>()};
  if (kind == "color_assignment") return ColorAssignmentWitness{ints("colors")};
  if (kind == "assignment") return AssignmentWitness{need(j, "values").get<std::vector<bool>>()};
  if (kind == "three_coloring") return ThreeColoringWitness{ints("colors")};
  fail("SyntaxError", "unknown witness kind '" + kind + "'");
}

std::string serialize_witness(const Witness& w) {
  json j;
  j["format"] = kWitnessFormatTag;
  j["kind"] = witness_kind(w);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RowSelectionWitness>) j["rho"] = v.rho;
        else if constexpr (std::is_same_v<T, PermutationWitness>) j["rho"] = v.rho;
        else if constexpr (std::is_same_v<T, CenterStringWitness>) j["s"] = v.s;
        else if constexpr (std::is_same_v<T, LineEmbeddingWitness>) j["g"] = v.g;
        else if constexpr (std::is_same_v<T, PathSystemWitness>) j["paths"] = v.paths;
        else if constexpr (std::is_same_v<T, ColorAssignmentWitness>) j["colors"] = v.colors;
        else if constexpr (std::is_same_v<T, AssignmentWitness>) j["values"] = v.values;
        else if constexpr (std::is_same_v<T, ThreeColoringWitness>) j["colors"] = v.colors;
      },
      w);
  return j.dump();
}

// ---- graph utilities ------------------------------------------------------------

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
  std::vector<std::vector<int>> adj(g.n + 1);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> dist(g.n + 1, -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  dist.erase(dist.begin());
  return dist;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n == 0) return false;
  auto dist = bfs_distances(g, 1);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.n);
  for (int v = 1; v <= g.n; ++v) out.push_back(bfs_distances(g, v));
  return out;
}

}  // namespace superexp

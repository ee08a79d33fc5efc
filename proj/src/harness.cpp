#include "superexp/harness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superexp/reductions.hpp"

namespace superexp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail("EnvelopeExceeded", what);
}

TableGraph gen_table(TableFlavor flavor, int k, double p, SplitMix64& rng) {
  TableGraph t;
  t.k = k;
  t.flavor = flavor;
  if (flavor == TableFlavor::BipartitePermutationIndependentSet) {
    for (int i1 = 1; i1 <= k; ++i1)
      for (int j1 = 1; j1 <= k; ++j1)
        for (int i2 = k + 1; i2 <= 2 * k; ++i2)
          for (int j2 = k + 1; j2 <= 2 * k; ++j2)
            if (rng.bernoulli(p)) t.add_edge({i1, j1}, {i2, j2});
  } else {
    for (int i1 = 1; i1 <= k; ++i1)
      for (int j1 = 1; j1 <= k; ++j1)
        for (int i2 = i1 + 1; i2 <= k; ++i2)
          for (int j2 = 1; j2 <= k; ++j2)
            if (rng.bernoulli(p)) t.add_edge({i1, j1}, {i2, j2});
  }
  return t;
}

SimpleGraph gen_graph(int n, double p, SplitMix64& rng) {
  SimpleGraph g;
  g.n = n;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace

ProblemInstance gen_random(Problem problem, const GenParams& params, std::uint64_t seed) {
  SplitMix64 rng(seed);
  switch (problem) {
    case Problem::KkClique:
    case Problem::KkPermClique:
    case Problem::KkPermIs: {
      require(params.k >= 1 && params.k <= 6, "table side k <= 6");
      TableFlavor flavor = problem == Problem::KkClique        ? TableFlavor::Clique
                           : problem == Problem::KkPermClique ? TableFlavor::PermutationClique
                                                               : TableFlavor::PermutationIndependentSet;
      return gen_table(flavor, params.k, params.p, rng);
    }
    case Problem::Bpis: {
      require(params.k >= 1 && params.k <= 4, "bpis k <= 4");
      return gen_table(TableFlavor::BipartitePermutationIndependentSet, params.k, params.p, rng);
    }
    case Problem::HittingSet: {
      require(params.k >= 1 && params.k <= 8 && params.m >= 0 && params.m <= 64,
              "hitting set k <= 8, m <= 64");
      HittingSetInstance h;
      h.k = params.k;
      h.row_restricted = params.row_restricted;
      for (int x = 0; x < params.m; ++x) {
        std::vector<Cell> set;
        if (params.row_restricted) {
          // One Bernoulli per row, then a column draw for included rows.
          for (int i = 1; i <= params.k; ++i)
            if (rng.bernoulli(params.q))
              set.push_back({i, 1 + static_cast<int>(rng.below(params.k))});
        } else {
          for (int i = 1; i <= params.k; ++i)
            for (int j = 1; j <= params.k; ++j)
              if (rng.bernoulli(params.q)) set.push_back({i, j});
        }
        h.sets.push_back(set);
      }
      h.canonicalize();
      return h;
    }
    case Problem::Sat3: {
      require(params.n >= 1 && params.n <= 20 && params.m >= 0 && params.m <= 64,
              "sat3 n <= 20, m <= 64");
      CnfFormula f;
      f.num_vars = params.n;
      for (int c = 0; c < params.m; ++c) {
        std::vector<int> clause;
        for (int a = 0; a < 3; ++a) {
          int var = 1 + static_cast<int>(rng.below(params.n));
          bool neg = rng.below(2) == 1;
          clause.push_back(neg ? -var : var);
        }
        f.clauses.push_back(clause);
      }
      return f;
    }
    case Problem::ThreeColoring: {
      require(params.n >= 0 && params.n <= 40, "three_coloring n <= 40");
      return ThreeColoringInstance{gen_graph(params.n, params.p, rng)};
    }
    case Problem::ClosestString: {
      require(params.sigma >= 1 && params.sigma <= 9 && params.length >= 0 &&
                  params.length <= 8 && params.t >= 0 && params.t <= 32,
              "closest string sigma <= 9, L <= 8, t <= 32");
      ClosestStringInstance c;
      c.sigma = params.sigma;
      c.length = params.length;
      c.d = params.d;
      for (int i = 0; i < params.t; ++i) {
        std::vector<int> s(params.length);
        for (int pos = 0; pos < params.length; ++pos)
          s[pos] = 1 + static_cast<int>(rng.below(params.sigma));
        c.strings.push_back(s);
      }
      return c;
    }
    case Problem::ConstrainedPermutation: {
      require(params.k >= 1 && params.k <= 8 && params.m >= 0 && params.m <= 32,
              "constrained permutation kprime <= 8, m <= 32");
      ConstrainedPermutationInstance c;
      c.kprime = params.k;
      for (int x = 0; x < params.m; ++x) {
        std::vector<int> set;
        for (int e = 1; e <= params.k; ++e)
          if (rng.bernoulli(params.q)) set.push_back(e);
        c.sets.push_back(set);
      }
      c.canonicalize();
      return c;
    }
    case Problem::Distortion: {
      require(params.n >= 1 && params.n <= 16 && params.d >= 1, "distortion n <= 16, d >= 1");
      DistortionInstance d;
      d.d = params.d;
      d.graph.n = params.n;
      // Random spanning tree first, then one Bernoulli per remaining pair so
      // the stream does not depend on the tree shape.
      for (int v = 2; v <= params.n; ++v)
        d.graph.add_edge(1 + static_cast<int>(rng.below(v - 1)), v);
      for (int u = 1; u <= params.n; ++u)
        for (int v = u + 1; v <= params.n; ++v)
          if (rng.bernoulli(params.p) && !d.graph.adjacent(u, v)) d.graph.add_edge(u, v);
      return d;
    }
    case Problem::DisjointPaths:
    case Problem::DirectedDisjointPaths: {
      bool directed = problem == Problem::DirectedDisjointPaths;
      require(params.n >= 2 && params.n <= 16 && params.demands >= 0 &&
                  2 * params.demands <= params.n,
              "disjoint paths n <= 16, 2*demands <= n");
      DisjointPathsInstance d;
      d.directed = directed;
      d.n = params.n;
      if (directed) {
        for (int u = 1; u <= params.n; ++u)
          for (int v = 1; v <= params.n; ++v)
            if (u != v && rng.bernoulli(params.p)) d.add_link(u, v);
      } else {
        for (int u = 1; u <= params.n; ++u)
          for (int v = u + 1; v <= params.n; ++v)
            if (rng.bernoulli(params.p)) d.add_link(u, v);
      }
      std::vector<int> vertices(params.n);
      std::iota(vertices.begin(), vertices.end(), 1);
      for (int i = params.n - 1; i > 0; --i)
        std::swap(vertices[i], vertices[rng.below(i + 1)]);
      for (int q = 0; q < params.demands; ++q)
        d.demands.push_back({vertices[2 * q], vertices[2 * q + 1]});
      if (directed) {
        // Trivial single-bag decomposition; the splitting reduction makes
        // last-bag indices distinct itself.
        PathDecomposition pd;
        pd.bags.push_back(vertices);
        std::sort(pd.bags[0].begin(), pd.bags[0].end());
        d.decomposition = pd;
      }
      return d;
    }
    case Problem::Chromatic: {
      require(params.n >= 1 && params.n <= 16 && params.ell >= 1, "chromatic n <= 16");
      ChromaticInstance c;
      c.graph = gen_graph(params.n, params.p, rng);
      c.ell = params.ell;
      for (auto [u, v] : c.graph.edges) {
        c.vertex_cover.insert(u);
        c.vertex_cover.insert(v);
      }
      return c;
    }
  }
  fail("SyntaxError", "unknown problem");
}

// ---- fuzzing -------------------------------------------------------------------

namespace {

struct TrialOutcome {
  bool budget_hit = false;
  bool disagreement = false;
  bool audit = false;
  std::string detail;
};

bool rule_has_push_forward(const std::string& rule) {
  return rule != "permclique_to_chromatic";
}

// Applies the rule chain for one fuzz trial. Most rules are one application;
// the hs_to_ddp+ddp_to_udp pseudo-rule composes the two disjoint-paths steps.
std::vector<ReductionRecord> apply_rule_chain(const std::string& rule,
                                              const ProblemInstance& source,
                                              std::uint64_t sub_seed) {
  std::vector<ReductionRecord> chain;
  if (rule == "sat3_to_3col") {
    chain.push_back(sat3_to_3col(std::get<CnfFormula>(source)));
  } else if (rule == "3col_to_kkclique") {
    const auto& g = std::get<ThreeColoringInstance>(source).graph;
    chain.push_back(threecol_to_kkclique(g, smallest_clique_side(g.n)));
  } else if (rule == "recolor") {
    const auto& t = std::get<TableGraph>(source);
    chain.push_back(recolor_with(t, sample_random_coloring(t.k, mix(sub_seed, 1))));
  } else if (rule == "complement") {
    chain.push_back(complement_record(std::get<TableGraph>(source)));
  } else if (rule == "permis_to_bpis") {
    chain.push_back(permis_to_bpis(std::get<TableGraph>(source)));
  } else if (rule == "bpis_to_hs") {
    chain.push_back(bpis_to_hitting_set(std::get<TableGraph>(source)));
  } else if (rule == "hs_to_cs") {
    chain.push_back(hitting_set_to_closest_string(std::get<HittingSetInstance>(source)));
  } else if (rule == "bpis_to_cp") {
    chain.push_back(bpis_to_constrained_permutation(std::get<TableGraph>(source)));
  } else if (rule == "cp_to_distortion") {
    chain.push_back(
        constrained_permutation_to_distortion(std::get<ConstrainedPermutationInstance>(source)));
  } else if (rule == "hs_to_ddp") {
    chain.push_back(hitting_set_to_directed_disjoint_paths(std::get<HittingSetInstance>(source)));
  } else if (rule == "ddp_to_udp") {
    chain.push_back(directed_dp_to_undirected_dp(std::get<DisjointPathsInstance>(source)));
  } else if (rule == "permclique_to_chromatic") {
    chain.push_back(perm_clique_to_chromatic(std::get<TableGraph>(source)));
  } else if (rule == "hs_to_ddp+ddp_to_udp") {
    chain.push_back(hitting_set_to_directed_disjoint_paths(std::get<HittingSetInstance>(source)));
    chain.push_back(
        directed_dp_to_undirected_dp(std::get<DisjointPathsInstance>(chain.back().target)));
  } else {
    fail("SyntaxError", "unknown fuzz rule '" + rule + "'");
  }
  return chain;
}

Problem source_problem_of_rule(const std::string& rule) {
  if (rule == "sat3_to_3col") return Problem::Sat3;
  if (rule == "3col_to_kkclique") return Problem::ThreeColoring;
  if (rule == "recolor" || rule == "derand_recolor") return Problem::KkClique;
  if (rule == "complement" || rule == "permclique_to_chromatic") return Problem::KkPermClique;
  if (rule == "permis_to_bpis") return Problem::KkPermIs;
  if (rule == "bpis_to_hs" || rule == "bpis_to_cp") return Problem::Bpis;
  if (rule == "hs_to_cs" || rule == "hs_to_ddp" || rule == "hs_to_ddp+ddp_to_udp")
    return Problem::HittingSet;
  if (rule == "cp_to_distortion") return Problem::ConstrainedPermutation;
  if (rule == "ddp_to_udp") return Problem::DirectedDisjointPaths;
  fail("SyntaxError", "unknown fuzz rule '" + rule + "'");
}

TrialOutcome run_standard_trial(const std::string& rule, const ProblemInstance& source,
                                std::uint64_t sub_seed, std::uint64_t budget) {
  TrialOutcome out;
  auto chain = apply_rule_chain(rule, source, sub_seed);
  const ProblemInstance& target = chain.back().target;

  SolveResult src = solve_exhaustive(source, budget);
  SolveResult tgt = solve_exhaustive(target, budget);
  if (src.outcome == Outcome::BudgetExceeded || tgt.outcome == Outcome::BudgetExceeded) {
    out.budget_hit = true;
    return out;
  }

  bool audited = rule == "permclique_to_chromatic";
  if (src.outcome != tgt.outcome) {
    if (audited && src.outcome == Outcome::Yes && tgt.outcome == Outcome::No) {
      out.audit = true;
      out.detail = "forward soundness failure";
      return out;
    }
    if (rule == "recolor" && src.outcome == Outcome::Yes && tgt.outcome == Outcome::No)
      return out;  // expected for unsuitable colorings
    out.disagreement = true;
    out.detail = "source " + outcome_tag(src.outcome) + " vs target " + outcome_tag(tgt.outcome);
    return out;
  }

  if (tgt.outcome == Outcome::Yes) {
    Witness w = *tgt.witness;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      try {
        w = pull_back_witness(*it, w);
      } catch (const Error& e) {
        out.disagreement = true;
        out.detail = std::string("pull_back failed: ") + e.what();
        return out;
      }
      if (!verify_witness(it->source, w)) {
        out.disagreement = true;
        out.detail = "pulled-back witness does not verify for " + it->rule;
        return out;
      }
    }
  }
  if (src.outcome == Outcome::Yes && rule_has_push_forward(rule)) {
    Witness w = *src.witness;
    bool applicable = true;
    for (auto& rec : chain) {
      auto pushed = push_forward_witness(rec, w);
      if (!pushed) {
        applicable = false;
        break;
      }
      w = *pushed;
      if (!verify_witness(rec.target, w)) {
        out.disagreement = true;
        out.detail = "pushed-forward witness does not verify for " + rec.rule;
        return out;
      }
    }
    if (applicable && tgt.outcome == Outcome::No) {
      out.disagreement = true;
      out.detail = "verified forward witness for a target the oracle rejects";
    }
  }
  return out;
}

// bpis_to_cp targets have 24k elements; two-sided oracle testing is
// infeasible, so trials check the forward witness and its pull-back only.
TrialOutcome run_bpis_cp_trial(const ProblemInstance& source, std::uint64_t budget) {
  TrialOutcome out;
  auto rec = bpis_to_constrained_permutation(std::get<TableGraph>(source));
  SolveResult src = solve_exhaustive(source, budget);
  if (src.outcome == Outcome::BudgetExceeded) {
    out.budget_hit = true;
    return out;
  }
  if (src.outcome != Outcome::Yes) return out;
  auto pushed = push_forward_witness(rec, *src.witness);
  if (!pushed || !verify_witness(rec.target, *pushed)) {
    out.disagreement = true;
    out.detail = "forward CP witness does not verify";
    return out;
  }
  Witness back = pull_back_witness(rec, *pushed);
  if (!(back == *src.witness)) {
    out.disagreement = true;
    out.detail = "pull-back of the forward witness does not reproduce delta";
  }
  return out;
}

TrialOutcome run_derand_trial(const ProblemInstance& source, const ColoringFamily& family,
                              std::uint64_t budget) {
  TrialOutcome out;
  const auto& inst = std::get<TableGraph>(source);
  SolveResult src = solve_exhaustive(source, budget);
  if (src.outcome == Outcome::BudgetExceeded) {
    out.budget_hit = true;
    return out;
  }
  auto records = kkclique_to_perm_derandomized(inst, family);
  bool any_yes = false;
  for (auto& rec : records) {
    SolveResult tgt = solve_exhaustive(rec.target, budget);
    if (tgt.outcome == Outcome::BudgetExceeded) {
      out.budget_hit = true;
      return out;
    }
    if (tgt.outcome == Outcome::Yes) {
      any_yes = true;
      Witness back = pull_back_witness(rec, *tgt.witness);
      if (!verify_witness(source, back)) {
        out.disagreement = true;
        out.detail = "pulled-back member witness does not verify";
        return out;
      }
      break;
    }
  }
  if (any_yes != (src.outcome == Outcome::Yes)) {
    out.disagreement = true;
    out.detail = std::string("source ") + outcome_tag(src.outcome) + " vs members " +
                 (any_yes ? "yes" : "no");
  }
  return out;
}

}  // namespace

FuzzReport fuzz_equivalence(const std::string& rule, const GenParams& params,
                            std::uint64_t trials, std::uint64_t seed, std::uint64_t budget) {
  FuzzReport report;
  report.rule = rule;
  report.trials = trials;

  Problem src_problem = source_problem_of_rule(rule);
  std::optional<ColoringFamily> family;
  if (rule == "derand_recolor") family = build_family_loglog(params.k);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t sub_seed = mix(seed, trial);
    ProblemInstance source = gen_random(src_problem, params, sub_seed);

    TrialOutcome out;
    if (rule == "derand_recolor")
      out = run_derand_trial(source, *family, budget);
    else if (rule == "bpis_to_cp")
      out = run_bpis_cp_trial(source, budget);
    else
      out = run_standard_trial(rule, source, sub_seed, budget);

    if (out.budget_hit) {
      ++report.budget_exceeded;
    } else if (out.disagreement || out.audit) {
      FuzzCase c;
      c.trial = trial;
      c.sub_seed = sub_seed;
      c.source_json = serialize_instance(source);
      if (rule != "bpis_to_cp" && rule != "derand_recolor") {
        auto chain = apply_rule_chain(rule, source, sub_seed);
        c.target_json = serialize_instance(chain.back().target);
      }
      c.detail = out.detail;
      (out.audit ? report.audit_findings : report.disagreements).push_back(c);
    } else {
      ++report.agreements;
    }
  }
  return report;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string fuzz_report_csv(const FuzzReport& report) {
  std::ostringstream out;
  out << "rule,trials,agreements,disagreements,budget_exceeded,audit_findings\n";
  out << report.rule << ',' << report.trials << ',' << report.agreements << ','
      << report.disagreements.size() << ',' << report.budget_exceeded << ','
      << report.audit_findings.size() << '\n';
  out << "kind,trial,sub_seed,detail,source,target\n";
  for (const auto& c : report.disagreements)
    out << "disagreement," << c.trial << ',' << c.sub_seed << ',' << csv_escape(c.detail) << ','
        << csv_escape(c.source_json) << ',' << csv_escape(c.target_json) << '\n';
  for (const auto& c : report.audit_findings)
    out << "audit_finding," << c.trial << ',' << c.sub_seed << ',' << csv_escape(c.detail) << ','
        << csv_escape(c.source_json) << ',' << csv_escape(c.target_json) << '\n';
  return out.str();
}

// ---- randomized recoloring probability ---------------------------------------------

void Rational::reduce() {
  long long g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
}

namespace {

// Events of the randomized recoloring for the identity witness: (1) diagonal
// colors form a permutation, (2) no off-diagonal cell repeats its row's
// diagonal color.
bool recoloring_events_hold(const std::vector<int>& cells, int k) {
  for (int i = 0; i < k; ++i)
    for (int i2 = i + 1; i2 < k; ++i2)
      if (cells[i * k + i] == cells[i2 * k + i2]) return false;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (j != i && cells[i * k + j] == cells[i * k + i]) return false;
  return true;
}

}  // namespace

Rational perm_success_probability_exact(int k) {
  if (k < 1 || k > 3) fail("EnvelopeExceeded", "exact mode enumerates k^(k^2); k <= 3 only");
  int cells = k * k;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= k;
  std::vector<int> assignment(cells, 1);
  long long count = 0;
  for (;;) {
    if (recoloring_events_hold(assignment, k)) ++count;
    int i = cells - 1;
    while (i >= 0 && assignment[i] == k) --i;
    if (i < 0) break;
    ++assignment[i];
    for (int j = i + 1; j < cells; ++j) assignment[j] = 1;
  }
  Rational r{count, total};
  r.reduce();
  return r;
}

Rational perm_success_probability_closed_form(int k) {
  if (k < 1 || k > 5) fail("EnvelopeExceeded", "closed form overflows past k = 5");
  long long num = 1;
  for (int i = 2; i <= k; ++i) num *= i;  // k!
  for (int i = 0; i < k * (k - 1); ++i) num *= (k - 1);
  long long den = 1;
  for (int i = 0; i < k * k; ++i) den *= k;
  Rational r{num, den};
  r.reduce();
  return r;
}

double perm_success_probability_montecarlo(int k, std::uint64_t samples, std::uint64_t seed) {
  if (k < 1 || k > 8) fail("EnvelopeExceeded", "montecarlo supports k <= 8");
  SplitMix64 rng(seed);
  int cells = k * k;
  std::vector<int> assignment(cells);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < cells; ++i) assignment[i] = 1 + static_cast<int>(rng.below(k));
    if (recoloring_events_hold(assignment, k)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

// ---- growth benchmarking -------------------------------------------------------------

std::vector<BenchRow> bench_growth(Problem problem, int size_from, int size_to,
                                   std::uint64_t budget, int repetitions) {
  std::vector<BenchRow> rows;
  for (int size = size_from; size <= size_to; ++size) {
    for (int rep = 0; rep < repetitions; ++rep) {
      switch (problem) {
        case Problem::KkClique:
        case Problem::KkPermClique:
        case Problem::KkPermIs:
        case Problem::Bpis: {
          GenParams p;
          p.k = size;
          p.p = 0.0;  // edgeless: the no-pruning worst case
          ProblemInstance inst = gen_random(problem, p, 0);
          SolveResult r = solve_exhaustive(inst, budget);
          rows.push_back({problem_tag(problem), size, r.nodes_explored, r.wall_time_seconds,
                          outcome_tag(r.outcome)});
          break;
        }
        case Problem::ClosestString: {
          GenParams p;
          p.sigma = 3;
          p.length = size;
          p.d = std::max(1, size / 2);
          p.t = 4;
          auto inst = std::get<ClosestStringInstance>(
              gen_random(Problem::ClosestString, p, static_cast<std::uint64_t>(size)));
          SolveResult enumr = solve_exhaustive(inst, budget);
          rows.push_back({"closest_string/enum", size, enumr.nodes_explored,
                          enumr.wall_time_seconds, outcome_tag(enumr.outcome)});
          SolveResult br = solve_closest_string_branching(inst, budget);
          rows.push_back({"closest_string/branch", size, br.nodes_explored,
                          br.wall_time_seconds, outcome_tag(br.outcome)});
          break;
        }
        default:
          fail("EnvelopeExceeded", "bench supports the table problems and closest_string");
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "problem,size,nodes_explored,wall_time_seconds,outcome\n";
  for (const auto& r : rows)
    out << r.problem << ',' << r.size << ',' << r.nodes_explored << ',' << r.wall_time_seconds
        << ',' << r.outcome << '\n';
  return out.str();
}

}  // namespace superexp

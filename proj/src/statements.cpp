#include "cyclecheck/statements.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyc {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cols;
}

}  // namespace

std::vector<Statement> parse_statement_table(std::string_view text) {
  std::vector<Statement> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 8)
      throw std::invalid_argument("statement table line " + std::to_string(lineno) +
                                  ": expected 8 tab-separated columns");
    Statement s;
    s.id = cols[0];
    if (cols[1] == "forward") s.kind = StatementKind::Forward;
    else if (cols[1] == "reverse") s.kind = StatementKind::Reverse;
    else throw std::invalid_argument("statement " + s.id + ": bad kind '" + cols[1] + "'");
    if (cols[2] == "cbar") s.metric = RemainderMetric::CBar;
    else if (cols[2] == "pbar") s.metric = RemainderMetric::PBar;
    else throw std::invalid_argument("statement " + s.id + ": bad metric '" + cols[2] + "'");
    s.kappa_hyp = BoundExpr::parse(cols[3]);
    if (cols[4] == "eq1") s.degree_hyp = DegreeHyp::Eq1;
    else if (cols[4] == "sigma") s.degree_hyp = DegreeHyp::Sigma;
    else if (cols[4] == "none") s.degree_hyp = DegreeHyp::None;
    else throw std::invalid_argument("statement " + s.id + ": bad degree_hyp '" + cols[4] + "'");
    if (cols[5] != "-") s.remainder_hyp = BoundExpr::parse(cols[5]);
    s.conclusion = BoundExpr::parse(cols[6]);
    if (cols[7] == "proven") s.proven = true;
    else if (cols[7] == "conjectural") s.proven = false;
    else throw std::invalid_argument("statement " + s.id + ": bad status '" + cols[7] + "'");
    if ((s.kind == StatementKind::Reverse) != s.remainder_hyp.has_value())
      throw std::invalid_argument("statement " + s.id +
                                  ": remainder hypothesis must be present exactly for reverse statements");
    out.push_back(std::move(s));
  }
  // mechanical (sigma, pbar)-variants of Conj-1..Conj-10
  std::vector<Statement> variants;
  for (const Statement& s : out) {
    if (s.id.rfind("Conj-", 0) != 0) continue;
    std::string tail = s.id.substr(5);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }))
      continue;
    Statement v = s;
    v.id += "p";
    v.metric = RemainderMetric::PBar;
    v.generated = true;
    variants.push_back(std::move(v));
  }
  out.insert(out.end(), variants.begin(), variants.end());
  return out;
}

const std::vector<Statement>& registry() {
  static const std::vector<Statement> table = parse_statement_table(embedded_statement_table());
  return table;
}

const Statement& find_statement(std::string_view id) {
  for (const Statement& s : registry())
    if (s.id == id) return s;
  throw std::out_of_range("unknown statement id '" + std::string(id) + "'");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Vacuous: return "VACUOUS";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(CheckMode m) {
  switch (m) {
    case CheckMode::ForAll: return "forall";
    case CheckMode::Exists: return "exists";
    case CheckMode::Witness: return "witness";
  }
  return "?";
}

std::optional<CheckMode> parse_check_mode(std::string_view s) {
  if (s == "forall") return CheckMode::ForAll;
  if (s == "exists") return CheckMode::Exists;
  if (s == "witness") return CheckMode::Witness;
  return std::nullopt;
}

GraphAnalysis GraphAnalysis::compute(const Graph& g, std::size_t cycle_limit) {
  GraphAnalysis a;
  a.graph = g;
  if (g.order() == 0) return a;
  a.params = compute_params(g);
  a.c = generalized_cycle_order(g);
  CycleSetEnumeration sets = all_longest_cycle_sets(g, cycle_limit);
  a.cycle_sets = std::move(sets.sets);
  a.exhausted = sets.exhausted;
  a.remainders.reserve(a.cycle_sets.size());
  for (VertexSet s : a.cycle_sets) a.remainders.push_back(remainder_params_unchecked(g, s));
  return a;
}

namespace {

int metric_of(const RemainderParams& rem, RemainderMetric metric) {
  return metric == RemainderMetric::CBar ? rem.c_bar.value : rem.p_bar.value;
}

bool graph_hypotheses_hold(const GraphAnalysis& a, const Statement& s, const EvalContext& ctx) {
  if (Value::integer(a.params.kappa) < s.kappa_hyp.evaluate(ctx)) return false;
  switch (s.degree_hyp) {
    case DegreeHyp::None:
      return true;
    case DegreeHyp::Eq1:
      return degree_condition_holds(a.params.n, a.params.delta, ctx.lambda);
    case DegreeHyp::Sigma: {
      Value lhs = Value::from(a.params.sigma_value(ctx.lambda + 1));
      Value rhs = Value::integer(a.params.n +
                                 static_cast<long long>(ctx.lambda) * (ctx.lambda - 1));
      return lhs >= rhs;
    }
  }
  return false;
}

}  // namespace

CheckResult check_statement(const GraphAnalysis& a, const Statement& s, int lambda,
                            const CheckOptions& options) {
  CheckResult r;
  r.statement_id = s.id;
  r.lambda = lambda;
  r.mode = options.mode;
  r.params = a.params;
  r.c = a.c;
  if (a.graph.order() == 0 || lambda < 1 || lambda > a.params.delta) {
    r.verdict = Verdict::Vacuous;
    return r;
  }
  EvalContext ctx = EvalContext::of(a.params, lambda);
  if (!graph_hypotheses_hold(a, s, ctx)) {
    r.verdict = Verdict::Vacuous;
    return r;
  }
  const Value conclusion_bound = s.conclusion.evaluate(ctx);
  r.required = conclusion_bound;

  auto record_for = [&](std::size_t i, bool hyp, bool concl) {
    return CycleCheckRecord{a.cycle_sets[i], metric_of(a.remainders[i], s.metric), hyp, concl};
  };

  if (s.kind == StatementKind::Forward) {
    // conclusion: metric <= bound, for the longest cycle(s) per mode
    const std::size_t count =
        options.mode == CheckMode::Witness ? std::min<std::size_t>(1, a.cycle_sets.size())
                                           : a.cycle_sets.size();
    int max_seen = -1, min_seen = -1;
    for (std::size_t i = 0; i < count; ++i) {
      int rem = metric_of(a.remainders[i], s.metric);
      bool ok = Value::integer(rem) <= conclusion_bound;
      CycleCheckRecord rec = record_for(i, true, ok);
      r.cycles.push_back(rec);
      max_seen = std::max(max_seen, rem);
      min_seen = min_seen < 0 ? rem : std::min(min_seen, rem);
      if (options.mode == CheckMode::Exists) {
        if (ok) {
          r.verdict = Verdict::Holds;
          r.observed = rem;
          return r;
        }
      } else if (!ok) {
        r.verdict = Verdict::Counterexample;
        r.offending = rec;
        r.observed = rem;
        return r;
      }
    }
    if (options.mode == CheckMode::Exists) {
      if (!a.exhausted) {
        r.verdict = Verdict::Inconclusive;
      } else {
        r.verdict = Verdict::Counterexample;
        if (!r.cycles.empty()) r.offending = r.cycles.front();
        r.observed = min_seen;
      }
      return r;
    }
    if (!a.exhausted && options.mode == CheckMode::ForAll) {
      r.verdict = Verdict::Inconclusive;
      return r;
    }
    r.verdict = Verdict::Holds;
    r.observed = max_seen;
    return r;
  }

  // reverse: hypothesis metric >= bound per cycle, conclusion c >= bound
  const Value remainder_bound = s.remainder_hyp->evaluate(ctx);
  const bool conclusion_ok = Value::integer(a.c.value) >= conclusion_bound;
  r.observed = a.c.value;
  const std::size_t count =
      options.mode == CheckMode::Witness ? std::min<std::size_t>(1, a.cycle_sets.size())
                                         : a.cycle_sets.size();
  bool any_nohyp = false;
  for (std::size_t i = 0; i < count; ++i) {
    int rem = metric_of(a.remainders[i], s.metric);
    bool hyp = Value::integer(rem) >= remainder_bound;
    CycleCheckRecord rec = record_for(i, hyp, conclusion_ok);
    r.cycles.push_back(rec);
    any_nohyp |= !hyp;
    if (hyp && !conclusion_ok && options.mode != CheckMode::Exists) {
      r.verdict = Verdict::Counterexample;
      r.offending = rec;
      return r;
    }
  }
  if (conclusion_ok) {
    r.verdict = Verdict::Holds;
    return r;
  }
  switch (options.mode) {
    case CheckMode::ForAll:
      r.verdict = a.exhausted ? Verdict::Holds : Verdict::Inconclusive;
      break;
    case CheckMode::Exists:
      if (any_nohyp) {
        r.verdict = Verdict::Holds;
      } else if (!a.exhausted) {
        r.verdict = Verdict::Inconclusive;
      } else {
        r.verdict = Verdict::Counterexample;
        if (!r.cycles.empty()) r.offending = r.cycles.front();
      }
      break;
    case CheckMode::Witness:
      // the witness cycle did not satisfy the remainder hypothesis
      r.verdict = Verdict::Holds;
      break;
  }
  return r;
}

CheckResult check_statement(const Graph& g, const Statement& s, int lambda,
                            const CheckOptions& options) {
  return check_statement(GraphAnalysis::compute(g, options.cycle_limit), s, lambda, options);
}

const std::vector<ImplicationEdge>& implication_edges() {
  static const std::vector<ImplicationEdge> edges = {
      {"Thm-E", "Thm-C"}, {"Thm-E", "Thm-D"}, {"Thm-E", "Thm-4"}, {"Thm-E", "Thm-5"},
      {"Thm-C", "Thm-A"}, {"Thm-D", "Thm-A"}, {"Thm-4", "Thm-2"}, {"Thm-4", "Thm-3"},
      {"Thm-5", "Thm-1"}, {"Thm-5", "Thm-3"}, {"Thm-H", "Thm-F"}, {"Thm-H", "Thm-G"},
      {"Thm-H", "Thm-9"}, {"Thm-H", "Thm-10"}, {"Thm-F", "Thm-B"}, {"Thm-G", "Thm-B"},
      {"Thm-9", "Thm-7"}, {"Thm-9", "Thm-8"}, {"Thm-10", "Thm-6"}, {"Thm-10", "Thm-8"},
  };
  return edges;
}

std::vector<ImplicationViolation> implication_consistency(const Graph& g, int lambda,
                                                          const CheckOptions& options) {
  GraphAnalysis analysis = GraphAnalysis::compute(g, options.cycle_limit);
  std::vector<ImplicationViolation> violations;
  for (const ImplicationEdge& e : implication_edges()) {
    Verdict stronger = check_statement(analysis, find_statement(e.stronger), lambda, options).verdict;
    Verdict weaker = check_statement(analysis, find_statement(e.weaker), lambda, options).verdict;
    if (stronger == Verdict::Holds && weaker == Verdict::Counterexample)
      violations.push_back({e.stronger, e.weaker, stronger, weaker});
  }
  return violations;
}

}  // namespace cyc

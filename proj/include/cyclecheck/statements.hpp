#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclecheck/cycles.hpp"
#include "cyclecheck/expr.hpp"
#include "cyclecheck/graph.hpp"
#include "cyclecheck/invariants.hpp"

namespace cyc {

enum class StatementKind { Forward, Reverse };
enum class RemainderMetric { CBar, PBar };
enum class DegreeHyp { None, Eq1, Sigma };

/// One theorem or conjecture as a lambda-parameterized checkable predicate.
/// Forward: kappa/degree hypotheses imply an upper bound on the remainder
/// metric of a longest cycle. Reverse: for a longest cycle whose remainder
/// metric meets a lower bound, the circumference meets a lower bound.
struct Statement {
  std::string id;
  StatementKind kind = StatementKind::Forward;
  RemainderMetric metric = RemainderMetric::CBar;
  BoundExpr kappa_hyp;                      // hypothesis: kappa >= expr
  DegreeHyp degree_hyp = DegreeHyp::None;
  std::optional<BoundExpr> remainder_hyp;   // reverse only: metric >= expr
  BoundExpr conclusion;                     // forward: metric <= expr; reverse: c >= expr
  bool proven = false;
  bool generated = false;  // mechanical (sigma, pbar)-variant
};

/// Parses the tab-separated statement table (see data/statements.tsv) and
/// appends the generated pbar-variants of Conj-1..Conj-10.
std::vector<Statement> parse_statement_table(std::string_view text);

/// The table text compiled into the binary (mirrors data/statements.tsv).
const char* embedded_statement_table();

/// All statements, parsed once from the embedded table.
const std::vector<Statement>& registry();

/// Lookup by id; throws std::out_of_range for unknown ids.
const Statement& find_statement(std::string_view id);

enum class CheckMode { ForAll, Exists, Witness };
enum class Verdict { Holds, Vacuous, Counterexample, Inconclusive };

std::string_view to_string(Verdict v);
std::string_view to_string(CheckMode m);
std::optional<CheckMode> parse_check_mode(std::string_view s);

/// Per-graph facts shared by every statement check: scalar parameters, the
/// longest-cycle order, all longest-cycle vertex sets (up to a limit) and
/// their remainder parameters.
struct GraphAnalysis {
  Graph graph;
  GraphParams params;
  GeneralizedOrder c;
  std::vector<VertexSet> cycle_sets;
  std::vector<RemainderParams> remainders;  // parallel to cycle_sets
  bool exhausted = true;

  static GraphAnalysis compute(const Graph& g, std::size_t cycle_limit = 10000);
};

struct CycleCheckRecord {
  VertexSet set = 0;
  int remainder = 0;       // metric value for this cycle set
  bool hypothesis = false; // reverse: remainder hypothesis; forward: always true
  bool conclusion = false;
};

struct CheckResult {
  std::string statement_id;
  int lambda = 0;
  CheckMode mode = CheckMode::ForAll;
  Verdict verdict = Verdict::Vacuous;
  GraphParams params;
  GeneralizedOrder c;
  Value required = Value::integer(-1);  // conclusion bound; -1 when never evaluated (VACUOUS)
  int observed = -1;                    // offending metric value (forward) or c (reverse)
  std::optional<CycleCheckRecord> offending;  // decisive cycle for COUNTEREXAMPLE
  std::vector<CycleCheckRecord> cycles;       // all evaluated cycle records
};

struct CheckOptions {
  CheckMode mode = CheckMode::ForAll;
  std::size_t cycle_limit = 10000;
};

CheckResult check_statement(const GraphAnalysis& analysis, const Statement& s, int lambda,
                            const CheckOptions& options = {});
CheckResult check_statement(const Graph& g, const Statement& s, int lambda,
                            const CheckOptions& options = {});

/// The implication edges of the two proof-scheme diagrams (stronger ->
/// weaker). Exposed for the consistency meta-check.
struct ImplicationEdge {
  const char* stronger;
  const char* weaker;
};
const std::vector<ImplicationEdge>& implication_edges();

struct ImplicationViolation {
  std::string stronger;
  std::string weaker;
  Verdict stronger_verdict;
  Verdict weaker_verdict;
};

/// Asserts on one graph that no implication edge pairs a HOLDS verdict of the
/// stronger statement with a COUNTEREXAMPLE of the weaker one. Returns the
/// violated edges (expected empty; a violation indicates an encoding bug).
std::vector<ImplicationViolation> implication_consistency(const Graph& g, int lambda,
                                                          const CheckOptions& options = {});

}  // namespace cyc

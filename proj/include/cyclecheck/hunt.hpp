#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclecheck/statements.hpp"

namespace cyc {

/// One persisted hunt record (COUNTEREXAMPLE or INCONCLUSIVE). Records are
/// self-contained: decoding graph6 and re-running the check reproduces the
/// verdict.
struct HuntRecord {
  std::string graph6;
  std::string statement_id;
  int lambda = 0;
  CheckMode mode = CheckMode::ForAll;
  Verdict verdict = Verdict::Counterexample;
  int n = 0, delta = 0, kappa = 0, c = 0;
  int c_bar = -1, p_bar = -1;        // offending cycle's remainders, -1 if undecided
  std::vector<int> cycle;            // offending cycle's sorted vertex list
  Value required = Value::integer(0);
  int observed = -1;

  std::string to_json() const;
};

struct HuntJob {
  std::vector<std::string> statement_ids;
  int n_min = 1;
  int n_max = 8;
  std::optional<int> fixed_lambda;  // none = all valid lambda (1..delta)
  CheckMode mode = CheckMode::ForAll;
  std::optional<std::string> source_file;  // graph6 lines; none = built-in enumerator
  int jobs = 1;
  std::size_t cycle_limit = 10000;
  std::string out_path;
};

struct VerdictCounts {
  long long holds = 0, vacuous = 0, counterexamples = 0, inconclusive = 0;
  long long total() const { return holds + vacuous + counterexamples + inconclusive; }
};

struct HuntSummary {
  long long graphs = 0;
  std::map<std::string, VerdictCounts> per_statement;
  std::vector<HuntRecord> records;  // persisted records, sorted
  bool found_counterexample = false;
  bool found_inconclusive = false;
};

/// Runs every requested statement over every graph and all valid lambda,
/// appends COUNTEREXAMPLE/INCONCLUSIVE records to job.out_path (JSON lines,
/// written to a temp file and atomically renamed). Record order is
/// (graph6, stmt, lambda), independent of the parallelism degree.
HuntSummary hunt(const HuntJob& job);

/// Same, with pre-resolved statements (lets tests drive synthetic ones).
HuntSummary hunt(const HuntJob& job, const std::vector<Statement>& statements);

std::string format_summary(const HuntSummary& summary);

}  // namespace cyc

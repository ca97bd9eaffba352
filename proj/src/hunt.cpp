#include "cyclecheck/hunt.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "cyclecheck/enumerate.hpp"
#include "cyclecheck/graph6.hpp"

namespace cyc {

std::string HuntRecord::to_json() const {
  nlohmann::ordered_json j;
  j["graph6"] = graph6;
  j["stmt"] = statement_id;
  j["lambda"] = lambda;
  j["mode"] = to_string(mode);
  j["verdict"] = to_string(verdict);
  j["n"] = n;
  j["delta"] = delta;
  j["kappa"] = kappa;
  j["c"] = c;
  j["c_bar"] = c_bar;
  j["p_bar"] = p_bar;
  j["cycle"] = cycle;
  if (required.infinite)
    j["required"] = "inf";
  else if (required.den == 1)
    j["required"] = required.num;
  else
    j["required"] = required.str();
  j["observed"] = observed;
  return j.dump();
}

namespace {

std::vector<int> mask_to_sorted(VertexSet m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest_bit(m));
  return out;
}

std::vector<Graph> load_graphs(const HuntJob& job) {
  std::vector<Graph> graphs;
  if (job.source_file) {
    std::ifstream in(*job.source_file);
    if (!in) throw std::runtime_error("hunt: cannot open source file " + *job.source_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Graph g = graph6_decode(line);
      if (g.order() >= job.n_min && g.order() <= job.n_max) graphs.push_back(std::move(g));
    }
    return graphs;
  }
  for (int n = job.n_min; n <= job.n_max; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
  return graphs;
}

struct WorkerOutput {
  std::map<std::string, VerdictCounts> counts;
  std::vector<HuntRecord> records;
};

void process_graph(const Graph& g, const std::string& g6,
                   const std::vector<const Statement*>& statements, const HuntJob& job,
                   WorkerOutput& out) {
  GraphAnalysis analysis = GraphAnalysis::compute(g, job.cycle_limit);
  int lambda_lo = 1, lambda_hi = g.order() >= 1 ? analysis.params.delta : 0;
  if (job.fixed_lambda) lambda_lo = lambda_hi = *job.fixed_lambda;
  CheckOptions options{job.mode, job.cycle_limit};
  for (const Statement* s : statements) {
    VerdictCounts& vc = out.counts[s->id];
    for (int lambda = lambda_lo; lambda <= lambda_hi; ++lambda) {
      CheckResult r = check_statement(analysis, *s, lambda, options);
      switch (r.verdict) {
        case Verdict::Holds: ++vc.holds; break;
        case Verdict::Vacuous: ++vc.vacuous; break;
        case Verdict::Counterexample: ++vc.counterexamples; break;
        case Verdict::Inconclusive: ++vc.inconclusive; break;
      }
      if (r.verdict != Verdict::Counterexample && r.verdict != Verdict::Inconclusive) continue;
      HuntRecord rec;
      rec.graph6 = g6;
      rec.statement_id = s->id;
      rec.lambda = lambda;
      rec.mode = job.mode;
      rec.verdict = r.verdict;
      rec.n = analysis.params.n;
      rec.delta = analysis.params.delta;
      rec.kappa = analysis.params.kappa;
      rec.c = analysis.c.value;
      rec.required = r.required;
      rec.observed = r.observed;
      if (r.offending) {
        rec.cycle = mask_to_sorted(r.offending->set);
        for (std::size_t i = 0; i < analysis.cycle_sets.size(); ++i)
          if (analysis.cycle_sets[i] == r.offending->set) {
            rec.c_bar = analysis.remainders[i].c_bar.value;
            rec.p_bar = analysis.remainders[i].p_bar.value;
            break;
          }
      }
      out.records.push_back(std::move(rec));
    }
  }
}

}  // namespace

HuntSummary hunt(const HuntJob& job) {
  std::vector<Statement> statements;
  for (const std::string& id : job.statement_ids) statements.push_back(find_statement(id));
  return hunt(job, statements);
}

HuntSummary hunt(const HuntJob& job, const std::vector<Statement>& statements) {
  if (job.out_path.empty()) throw std::invalid_argument("hunt: output path required");
  if (job.jobs < 1) throw std::invalid_argument("hunt: jobs must be >= 1");

  std::vector<Graph> graphs = load_graphs(job);
  std::vector<std::string> encoded;
  encoded.reserve(graphs.size());
  for (const Graph& g : graphs) encoded.push_back(graph6_encode(g));

  std::vector<const Statement*> stmts;
  for (const Statement& s : statements) stmts.push_back(&s);

  const int workers = std::max(1, std::min<int>(job.jobs, static_cast<int>(graphs.size())));
  std::vector<WorkerOutput> outputs(static_cast<std::size_t>(std::max(workers, 1)));
  {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        for (std::size_t i = static_cast<std::size_t>(w); i < graphs.size();
             i += static_cast<std::size_t>(workers))
          process_graph(graphs[i], encoded[i], stmts, job, outputs[static_cast<std::size_t>(w)]);
      });
    for (std::thread& t : pool) t.join();
  }

  HuntSummary summary;
  summary.graphs = static_cast<long long>(graphs.size());
  for (const Statement& s : statements) summary.per_statement[s.id];  // stable set of keys
  for (WorkerOutput& out : outputs) {
    for (auto& [id, vc] : out.counts) {
      VerdictCounts& total = summary.per_statement[id];
      total.holds += vc.holds;
      total.vacuous += vc.vacuous;
      total.counterexamples += vc.counterexamples;
      total.inconclusive += vc.inconclusive;
    }
    std::move(out.records.begin(), out.records.end(), std::back_inserter(summary.records));
  }
  std::sort(summary.records.begin(), summary.records.end(),
            [](const HuntRecord& a, const HuntRecord& b) {
              return std::tie(a.graph6, a.statement_id, a.lambda) <
                     std::tie(b.graph6, b.statement_id, b.lambda);
            });
  for (const HuntRecord& rec : summary.records) {
    summary.found_counterexample |= rec.verdict == Verdict::Counterexample;
    summary.found_inconclusive |= rec.verdict == Verdict::Inconclusive;
  }

  // checkpoint-style write: temp file first, atomic rename on success
  const std::string tmp = job.out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("hunt: cannot write " + tmp);
    for (const HuntRecord& rec : summary.records) out << rec.to_json() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("hunt: write failed on " + tmp);
  }
  if (std::rename(tmp.c_str(), job.out_path.c_str()) != 0)
    throw std::runtime_error("hunt: cannot rename " + tmp + " to " + job.out_path);
  return summary;
}

std::string format_summary(const HuntSummary& summary) {
  std::ostringstream out;
  out << "graphs: " << summary.graphs << "\n";
  out << "statement        HOLDS   VACUOUS  COUNTEREXAMPLE  INCONCLUSIVE\n";
  for (const auto& [id, vc] : summary.per_statement) {
    out << id;
    for (std::size_t i = id.size(); i < 16; ++i) out << ' ';
    out << ' ' << vc.holds << "  " << vc.vacuous << "  " << vc.counterexamples << "  "
        << vc.inconclusive << "\n";
  }
  return out.str();
}

}  // namespace cyc

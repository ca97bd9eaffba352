#include "cyclecheck/family.hpp"

#include <sstream>

#include "cyclecheck/invariants.hpp"

namespace cyc {

Graph build_family(FamilySpec spec) {
  if (spec.m < 1 || spec.t < 1)
    throw std::invalid_argument("build_family: m and t must be >= 1");
  std::vector<Graph> blocks(static_cast<std::size_t>(spec.t + 1), complete_graph(spec.m));
  return join(disjoint_union(blocks), complete_graph(spec.t));
}

FamilyParams predict_params(FamilySpec spec) {
  if (spec.m < 1 || spec.t < 1)
    throw std::invalid_argument("predict_params: m and t must be >= 1");
  FamilyParams p;
  p.n = (spec.t + 1) * spec.m + spec.t;
  p.delta = spec.m + spec.t - 1;
  p.kappa = spec.t;
  p.c = spec.t * (spec.m + 1);
  p.c_bar = spec.m;
  p.p_bar = spec.m;
  return p;
}

FamilyParams exact_params(FamilySpec spec) {
  Graph g = build_family(spec);
  FamilyParams p;
  p.n = g.order();
  p.delta = min_degree(g);
  p.kappa = vertex_connectivity(g);
  CycleReport report = analyze_cycles(g);
  p.c = report.c.value;
  p.c_bar = report.c_bar.value;
  p.p_bar = report.p_bar.value;
  return p;
}

std::optional<std::string> cross_validate_family(FamilySpec spec) {
  FamilyParams predicted = predict_params(spec);
  FamilyParams exact = exact_params(spec);
  std::ostringstream msg;
  if (!(predicted == exact)) {
    msg << "family(m=" << spec.m << ",t=" << spec.t << "): predicted (n=" << predicted.n
        << ",delta=" << predicted.delta << ",kappa=" << predicted.kappa << ",c=" << predicted.c
        << ",c_bar=" << predicted.c_bar << ",p_bar=" << predicted.p_bar << ") but solved (n="
        << exact.n << ",delta=" << exact.delta << ",kappa=" << exact.kappa << ",c=" << exact.c
        << ",c_bar=" << exact.c_bar << ",p_bar=" << exact.p_bar << ")";
    return msg.str();
  }
  // c_bar = p_bar = m must hold for every longest cycle, not just the witness
  Graph g = build_family(spec);
  CycleSetEnumeration sets = all_longest_cycle_sets(g, 100000);
  if (!sets.exhausted)
    return "family cross-validation: longest-cycle enumeration limit hit";
  for (VertexSet s : sets.sets) {
    RemainderParams rem = remainder_params_unchecked(g, s);
    if (rem.c_bar.value != predicted.c_bar || rem.p_bar.value != predicted.p_bar) {
      msg << "family(m=" << spec.m << ",t=" << spec.t
          << "): longest cycle with remainder (c_bar=" << rem.c_bar.value
          << ",p_bar=" << rem.p_bar.value << ") != m=" << spec.m;
      return msg.str();
    }
  }
  return std::nullopt;
}

}  // namespace cyc

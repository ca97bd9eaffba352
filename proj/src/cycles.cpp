#include "cyclecheck/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyc {

namespace {

constexpr int kSubsetDpMaxN = 20;

bool use_dp(const Graph& g, SolverTier tier) {
  switch (tier) {
    case SolverTier::SubsetDp:
      if (g.order() > kSubsetDpMaxN)
        throw std::invalid_argument("SubsetDp tier limited to n <= 20");
      return true;
    case SolverTier::BranchBound:
      return false;
    case SolverTier::Auto:
    default:
      return g.order() <= kSubsetDpMaxN;
  }
}

// ---- subset DP tier ------------------------------------------------------
//
// dp[S] is the bitmask of endpoints v such that the induced subgraph on S
// carries a simple path that starts at min(S) and ends at v. A set S with
// |S| >= 3 carries a spanning cycle iff some endpoint in dp[S] other than
// min(S) is adjacent to min(S).

struct CycleDp {
  int n = 0;
  int best = 0;  // longest standard cycle order, 0 if acyclic
  std::vector<std::uint32_t> adj;
  std::vector<std::uint32_t> dp;

  bool closes(std::uint32_t s) const {
    int root = std::countr_zero(s);
    return (dp[s] & adj[static_cast<std::size_t>(root)] & ~(std::uint32_t{1} << root)) != 0;
  }
};

CycleDp run_cycle_dp(const Graph& g) {
  CycleDp r;
  r.n = g.order();
  r.adj.resize(static_cast<std::size_t>(r.n));
  for (int v = 0; v < r.n; ++v) r.adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v));
  const std::uint32_t full = static_cast<std::uint32_t>(low_mask(r.n));
  r.dp.assign(std::size_t{1} << r.n, 0);
  for (int v = 0; v < r.n; ++v) r.dp[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t ends = r.dp[s];
    if (!ends) continue;
    const int root = std::countr_zero(s);
    if (std::popcount(s) >= 3 && r.closes(s)) r.best = std::max(r.best, std::popcount(s));
    const std::uint32_t open = full & ~s & ~((std::uint32_t{2} << root) - 1);
    if (!open) continue;
    for (std::uint32_t es = ends; es; es &= es - 1) {
      int v = std::countr_zero(es);
      for (std::uint32_t ext = r.adj[static_cast<std::size_t>(v)] & open; ext; ext &= ext - 1) {
        int u = std::countr_zero(ext);
        r.dp[s | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  return r;
}

std::vector<int> reconstruct_cycle(const Graph& g, const CycleDp& r, std::uint32_t s) {
  const int root = std::countr_zero(s);
  std::uint32_t close = r.dp[s] & r.adj[static_cast<std::size_t>(root)] & ~(std::uint32_t{1} << root);
  std::vector<int> seq;
  int v = std::countr_zero(close);
  std::uint32_t rest = s;
  while (std::popcount(rest) > 1) {
    seq.push_back(v);
    rest &= ~(std::uint32_t{1} << v);
    std::uint32_t prev = r.dp[rest] & static_cast<std::uint32_t>(g.neighbors(v));
    v = std::countr_zero(prev);
  }
  seq.push_back(root);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

struct PathDp {
  int n = 0;
  int best = 0;  // longest path vertex count, 0 on the empty graph
  std::vector<std::uint32_t> adj;
  std::vector<std::uint32_t> dp;  // dp[S] = endpoints of paths spanning S (any start)
};

PathDp run_path_dp(const Graph& g) {
  PathDp r;
  r.n = g.order();
  r.adj.resize(static_cast<std::size_t>(r.n));
  for (int v = 0; v < r.n; ++v) r.adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v));
  const std::uint32_t full = static_cast<std::uint32_t>(low_mask(r.n));
  r.dp.assign((std::size_t{1} << r.n), 0);
  for (int v = 0; v < r.n; ++v) r.dp[std::size_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t s = 1; s <= full && full; ++s) {
    std::uint32_t ends = r.dp[s];
    if (!ends) continue;
    r.best = std::max(r.best, std::popcount(s));
    const std::uint32_t open = full & ~s;
    if (!open) continue;
    for (std::uint32_t es = ends; es; es &= es - 1) {
      int v = std::countr_zero(es);
      for (std::uint32_t ext = r.adj[static_cast<std::size_t>(v)] & open; ext; ext &= ext - 1) {
        int u = std::countr_zero(ext);
        r.dp[s | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  return r;
}

std::vector<int> reconstruct_path(const Graph& g, const PathDp& r, std::uint32_t s) {
  std::vector<int> seq;
  int v = std::countr_zero(r.dp[s]);
  std::uint32_t rest = s;
  while (std::popcount(rest) > 1) {
    seq.push_back(v);
    rest &= ~(std::uint32_t{1} << v);
    std::uint32_t prev = r.dp[rest] & static_cast<std::uint32_t>(g.neighbors(v));
    v = std::countr_zero(prev);
  }
  seq.push_back(v);
  std::reverse(seq.begin(), seq.end());
  return seq;
}

// ---- branch-and-bound tier -----------------------------------------------
//
// Depth-first search over simple paths. Cycles are rooted at their minimum
// vertex; the reachability bound prunes branches that cannot reach the
// current best (phase 1) or the known optimum (enumeration).

struct CycleBb {
  const Graph& g;
  int n;
  int best = 0;
  VertexSet best_set = 0;
  std::vector<int> best_seq;

  // enumeration state
  bool collecting = false;
  int target = 0;
  std::set<VertexSet>* sink = nullptr;
  std::size_t limit = 0;
  bool truncated = false;
  std::vector<int> stack;

  explicit CycleBb(const Graph& graph) : g(graph), n(graph.order()) {}

  void dfs(int root, int cur, VertexSet onpath, int len) {
    if (truncated) return;
    if (len >= 3 && g.adjacent(cur, root)) {
      if (collecting) {
        if (len == target) {
          if (sink->size() == limit && !sink->contains(onpath)) {
            truncated = true;
            return;
          }
          sink->insert(onpath);
        }
      } else if (len > best) {
        best = len;
        best_set = onpath;
        best_seq = stack;
      }
    }
    VertexSet avail = low_mask(n) & ~onpath & ~low_mask(root);
    VertexSet reach = g.component_of(cur, avail | bit(cur));
    int bound = len - 1 + popcount(reach);
    if (collecting ? bound < target : bound <= best) return;
    if (!(reach & g.neighbors(root))) return;  // cycle can no longer close
    for (VertexSet s = g.neighbors(cur) & avail; s; s &= s - 1) {
      int u = lowest_bit(s);
      stack.push_back(u);
      dfs(root, u, onpath | bit(u), len + 1);
      stack.pop_back();
      if (truncated) return;
    }
  }

  void run() {
    for (int root = 0; root < n; ++root) {
      stack.assign(1, root);
      dfs(root, root, bit(root), 1);
      if (truncated) return;
    }
  }
};

struct PathBb {
  const Graph& g;
  int n;
  int best = 0;
  std::vector<int> best_seq;
  std::vector<int> stack;

  explicit PathBb(const Graph& graph) : g(graph), n(graph.order()) {}

  void dfs(int cur, VertexSet onpath, int len) {
    if (len > best) {
      best = len;
      best_seq = stack;
    }
    VertexSet avail = low_mask(n) & ~onpath;
    if (len + popcount(g.component_of(cur, avail | bit(cur))) - 1 <= best) return;
    for (VertexSet s = g.neighbors(cur) & avail; s; s &= s - 1) {
      int u = lowest_bit(s);
      stack.push_back(u);
      dfs(u, onpath | bit(u), len + 1);
      stack.pop_back();
    }
  }

  void run() {
    for (int v = 0; v < n; ++v) {
      stack.assign(1, v);
      dfs(v, bit(v), 1);
    }
  }
};

// Standard (order >= 3) longest cycle; returns order 0 and no sequence when
// the graph is acyclic.
std::pair<int, std::vector<int>> standard_longest_cycle(const Graph& g, SolverTier tier) {
  if (g.order() < 3) return {0, {}};
  if (use_dp(g, tier)) {
    CycleDp r = run_cycle_dp(g);
    if (r.best == 0) return {0, {}};
    const std::uint32_t full = static_cast<std::uint32_t>(low_mask(r.n));
    for (std::uint32_t s = 1; s <= full; ++s)
      if (std::popcount(s) == r.best && r.dp[s] && r.closes(s))
        return {r.best, reconstruct_cycle(g, r, s)};
    return {0, {}};
  }
  CycleBb bb(g);
  bb.run();
  return {bb.best, bb.best_seq};
}

std::pair<int, std::vector<int>> standard_longest_path(const Graph& g, SolverTier tier) {
  if (g.order() == 0) return {0, {}};
  if (use_dp(g, tier)) {
    PathDp r = run_path_dp(g);
    const std::uint32_t full = static_cast<std::uint32_t>(low_mask(r.n));
    for (std::uint32_t s = 1; s <= full; ++s)
      if (r.dp[s] && std::popcount(s) == r.best) return {r.best, reconstruct_path(g, r, s)};
    return {0, {}};
  }
  PathBb bb(g);
  bb.run();
  return {bb.best, bb.best_seq};
}

std::pair<int, int> first_edge(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    VertexSet s = g.neighbors(u) & ~low_mask(u + 1);
    if (s) return {u, lowest_bit(s)};
  }
  return {-1, -1};
}

std::vector<int> mask_to_vertices(VertexSet m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest_bit(m));
  return out;
}

VertexSet vertices_to_mask(const std::vector<int>& vs) {
  VertexSet m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

}  // namespace

LongestCycleResult longest_cycle(const Graph& g, SolverTier tier) {
  if (g.order() == 0) return {GeneralizedOrder{0}, {}, {}};
  if (!g.has_edges()) return {GeneralizedOrder{1}, {}, {0}};
  auto [order, seq] = standard_longest_cycle(g, tier);
  if (order == 0) {
    auto [u, v] = first_edge(g);
    return {GeneralizedOrder{2}, {}, {u, v}};
  }
  return {GeneralizedOrder{order}, seq, mask_to_vertices(vertices_to_mask(seq))};
}

LongestPathResult longest_path(const Graph& g, SolverTier tier) {
  if (g.order() == 0) return {GeneralizedOrder{0}, {}};
  if (!g.has_edges()) return {GeneralizedOrder{1}, {0}};
  auto [order, seq] = standard_longest_path(g, tier);
  return {GeneralizedOrder{order}, seq};
}

GeneralizedOrder generalized_cycle_order(const Graph& g, SolverTier tier) {
  if (g.order() == 0) return GeneralizedOrder{0};
  if (!g.has_edges()) return GeneralizedOrder{1};
  int order = standard_longest_cycle(g, tier).first;
  return GeneralizedOrder{order == 0 ? 2 : order};
}

GeneralizedOrder generalized_path_order(const Graph& g, SolverTier tier) {
  if (g.order() == 0) return GeneralizedOrder{0};
  if (!g.has_edges()) return GeneralizedOrder{1};
  return GeneralizedOrder{standard_longest_path(g, tier).first};
}

bool is_generalized_cycle_set(const Graph& g, VertexSet q) {
  if (q == 0 || (q & ~g.vertex_mask())) return false;
  int size = popcount(q);
  if (size == 1) return true;
  if (size == 2) {
    int u = lowest_bit(q);
    return g.adjacent(u, lowest_bit(q & (q - 1)));
  }
  return standard_longest_cycle(g.induced(q), SolverTier::Auto).first == size;
}

RemainderParams remainder_params_unchecked(const Graph& g, VertexSet cycle_set) {
  Graph rest = g.induced(g.vertex_mask() & ~cycle_set);
  return {generalized_cycle_order(rest), generalized_path_order(rest)};
}

RemainderParams remainder_params(const Graph& g, VertexSet cycle_set) {
  if (!is_generalized_cycle_set(g, cycle_set))
    throw std::invalid_argument("remainder_params: vertex set is not a cycle of the graph");
  return remainder_params_unchecked(g, cycle_set);
}

CycleSetEnumeration all_longest_cycle_sets(const Graph& g, std::size_t limit, SolverTier tier) {
  CycleSetEnumeration out;
  GeneralizedOrder c = generalized_cycle_order(g, tier);
  if (c.value == 0) return out;
  if (c.value == 1) {
    for (int v = 0; v < g.order(); ++v) {
      if (out.sets.size() == limit) {
        out.exhausted = false;
        return out;
      }
      out.sets.push_back(bit(v));
    }
    return out;
  }
  if (c.value == 2) {
    std::vector<VertexSet> edges;
    for (int u = 0; u < g.order(); ++u)
      for (VertexSet s = g.neighbors(u) & ~low_mask(u + 1); s; s &= s - 1)
        edges.push_back(bit(u) | bit(lowest_bit(s)));
    std::sort(edges.begin(), edges.end());
    for (VertexSet e : edges) {
      if (out.sets.size() == limit) {
        out.exhausted = false;
        return out;
      }
      out.sets.push_back(e);
    }
    return out;
  }
  if (use_dp(g, tier)) {
    CycleDp r = run_cycle_dp(g);
    const std::uint32_t full = static_cast<std::uint32_t>(low_mask(r.n));
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (std::popcount(s) != c.value || !r.dp[s] || !r.closes(s)) continue;
      if (out.sets.size() == limit) {
        out.exhausted = false;
        return out;
      }
      out.sets.push_back(s);
    }
    return out;
  }
  std::set<VertexSet> sets;
  CycleBb bb(g);
  bb.collecting = true;
  bb.target = c.value;
  bb.sink = &sets;
  bb.limit = limit;
  bb.run();
  out.sets.assign(sets.begin(), sets.end());
  out.exhausted = !bb.truncated;
  return out;
}

CycleReport analyze_cycles(const Graph& g, SolverTier tier) {
  CycleReport report;
  LongestCycleResult lc = longest_cycle(g, tier);
  report.c = lc.order;
  report.cycle = lc.sequence;
  report.witness = lc.witness;
  if (report.c.value == 0) {
    report.c_bar = GeneralizedOrder{0};
    report.p_bar = GeneralizedOrder{0};
    return report;
  }
  RemainderParams rem = remainder_params_unchecked(g, vertices_to_mask(lc.witness));
  report.c_bar = rem.c_bar;
  report.p_bar = rem.p_bar;
  return report;
}

namespace {

void check_cycle_arg(const Graph& g, VertexSet q, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be positive");
  if (!is_generalized_cycle_set(g, q))
    throw std::invalid_argument("vertex set is not a cycle of the graph");
}

}  // namespace

bool is_d_lambda(const Graph& g, VertexSet q, int lambda) {
  check_cycle_arg(g, q, lambda);
  for (VertexSet comp : g.components_within(g.vertex_mask() & ~q))
    if (popcount(comp) > lambda - 1) return false;
  return true;
}

bool is_pd_lambda(const Graph& g, VertexSet q, int lambda) {
  check_cycle_arg(g, q, lambda);
  return generalized_path_order(g.induced(g.vertex_mask() & ~q)).value <= lambda - 1;
}

bool is_cd_lambda(const Graph& g, VertexSet q, int lambda) {
  check_cycle_arg(g, q, lambda);
  return generalized_cycle_order(g.induced(g.vertex_mask() & ~q)).value <= lambda - 1;
}

}  // namespace cyc

#include "cyclecheck/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cyc {

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("min_degree: undefined on empty graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths (Menger), via unit
// vertex capacities: each vertex v becomes v_in -> v_out with capacity 1,
// each edge uv becomes u_out -> v_in and v_out -> u_in with effectively
// unbounded capacity.
int disjoint_path_count(const Graph& g, int s, int t) {
  const int n = g.order();
  const int big = n + 1;
  const int nodes = 2 * n;  // v_in = 2v, v_out = 2v+1
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes),
                                    std::vector<int>(static_cast<std::size_t>(nodes), 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? big : 1;
  for (int u = 0; u < n; ++u)
    for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
      int v = lowest_bit(m);
      cap[2 * u + 1][2 * v] = big;
    }

  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(nodes));
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = source;
    std::vector<int> queue{source};
    for (std::size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
      int u = queue[qi];
      for (int v = 0; v < nodes; ++v)
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = u;
          queue.push_back(v);
        }
    }
    if (prev[sink] < 0) break;
    for (int v = sink; v != source; v = prev[v]) {
      cap[prev[v]][v] -= 1;
      cap[v][prev[v]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!g.connected()) return 0;
  int best = n - 1;  // complete-graph convention
  for (int u = 0; u < n && best > 0; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) {
        best = std::min(best, disjoint_path_count(g, u, v));
        if (best == 0) break;
      }
  return best;
}

namespace {

int mis_search(const Graph& g, VertexSet cand) {
  if (!cand) return 0;
  // pivot on the highest-degree vertex inside cand
  int pivot = -1, pd = -1;
  for (VertexSet m = cand; m; m &= m - 1) {
    int v = lowest_bit(m);
    int d = popcount(g.neighbors(v) & cand);
    if (d > pd) {
      pd = d;
      pivot = v;
    }
  }
  if (pd == 0) return popcount(cand);  // all isolated within cand
  int with = 1 + mis_search(g, cand & ~(g.neighbors(pivot) | bit(pivot)));
  int without = mis_search(g, cand & ~bit(pivot));
  return std::max(with, without);
}

struct SigmaSearch {
  const Graph& g;
  int k;
  std::vector<int> order;  // vertices sorted by ascending degree
  long long best = std::numeric_limits<long long>::max();

  void dfs(std::size_t start, VertexSet chosen_nbrs, int count, long long sum) {
    if (count == k) {
      best = std::min(best, sum);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(k - count) <= order.size(); ++i) {
      int v = order[i];
      if (contains(chosen_nbrs, v)) continue;
      long long d = g.degree(v);
      // remaining picks come later in ascending-degree order
      if (sum + d * (k - count) >= best) break;
      dfs(i + 1, chosen_nbrs | g.neighbors(v) | bit(v), count + 1, sum + d);
    }
  }
};

}  // namespace

int independence_number(const Graph& g) { return mis_search(g, g.vertex_mask()); }

ExtInt sigma_k(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("sigma_k: k must be positive");
  if (k > g.order()) return ExtInt::inf();
  SigmaSearch search{g, k, {}, std::numeric_limits<long long>::max()};
  search.order.resize(static_cast<std::size_t>(g.order()));
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  search.dfs(0, 0, 0, 0);
  if (search.best == std::numeric_limits<long long>::max()) return ExtInt::inf();
  return ExtInt::of(search.best);
}

GraphParams compute_params(const Graph& g) {
  GraphParams p;
  p.n = g.order();
  p.delta = min_degree(g);
  p.kappa = vertex_connectivity(g);
  p.alpha = independence_number(g);
  p.sigma.reserve(static_cast<std::size_t>(p.alpha));
  for (int k = 1; k <= p.alpha; ++k) {
    ExtInt s = sigma_k(g, k);
    if (s.infinite) throw std::logic_error("compute_params: sigma unexpectedly infinite");
    p.sigma.push_back(s.value);
  }
  return p;
}

}  // namespace cyc

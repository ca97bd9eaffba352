#include "cyclecheck/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace cyc {

namespace {

constexpr int kCanonicalMaxN = 11;  // 55 triangle bits
constexpr int kEnumerateMaxN = 9;

// Backtracking canonical labeling. Vertex orderings are grown one position at
// a time; column j of the target string is the adjacency of the j-th placed
// vertex to the previously placed ones, bit i standing for the i-th placement
// (the same layout graph_from_key reads). The canonical form is the minimum
// of the column sequence over all orderings. The frontier keeps every partial
// ordering attaining the minimal prefix, deduplicated by (used vertex set,
// column each unused vertex would contribute): two such orderings have
// identical sets of completions, so one representative suffices.
struct Partial {
  std::array<std::int8_t, kCanonicalMaxN> seq{};
  int len = 0;
  VertexSet used = 0;
};

std::uint32_t column_bits(const Graph& g, const Partial& p, int v) {
  std::uint32_t col = 0;
  for (int i = 0; i < p.len; ++i) col |= (g.adjacent(v, p.seq[static_cast<std::size_t>(i)]) ? 1u : 0u) << i;
  return col;
}

// (used set, column of every unused vertex in ascending vertex order)
struct Signature {
  VertexSet used;
  std::array<std::uint32_t, kCanonicalMaxN> cols{};
  int count = 0;

  friend bool operator<(const Signature& a, const Signature& b) {
    if (a.used != b.used) return a.used < b.used;
    for (int i = 0; i < a.count; ++i)
      if (a.cols[static_cast<std::size_t>(i)] != b.cols[static_cast<std::size_t>(i)])
        return a.cols[static_cast<std::size_t>(i)] < b.cols[static_cast<std::size_t>(i)];
    return false;
  }
  friend bool operator==(const Signature& a, const Signature& b) {
    return !(a < b) && !(b < a);
  }
};

Signature signature_of(const Graph& g, const Partial& p) {
  Signature sig;
  sig.used = p.used;
  for (int v = 0; v < g.order(); ++v)
    if (!contains(p.used, v)) sig.cols[static_cast<std::size_t>(sig.count++)] = column_bits(g, p, v);
  return sig;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxN) throw CapacityError("canonical_key: n > 11 not supported");
  std::vector<Partial> frontier{Partial{}};
  std::vector<Partial> next;
  std::uint64_t key = 0;
  int bitpos = 0;
  for (int j = 0; j < n; ++j) {
    std::uint32_t best = ~std::uint32_t{0};
    next.clear();
    for (const Partial& p : frontier) {
      for (int v = 0; v < n; ++v) {
        if (contains(p.used, v)) continue;
        std::uint32_t col = column_bits(g, p, v);
        if (col > best) continue;
        if (col < best) {
          best = col;
          next.clear();
        }
        Partial q = p;
        q.seq[static_cast<std::size_t>(q.len++)] = static_cast<std::int8_t>(v);
        q.used |= bit(v);
        next.push_back(q);
      }
    }
    if (next.size() > 1) {
      std::vector<std::pair<Signature, std::size_t>> sigs;
      sigs.reserve(next.size());
      for (std::size_t i = 0; i < next.size(); ++i) sigs.emplace_back(signature_of(g, next[i]), i);
      std::sort(sigs.begin(), sigs.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      frontier.clear();
      for (std::size_t i = 0; i < sigs.size(); ++i)
        if (i == 0 || !(sigs[i].first == sigs[i - 1].first))
          frontier.push_back(next[sigs[i].second]);
    } else {
      frontier = next;
    }
    key |= static_cast<std::uint64_t>(best) << bitpos;
    bitpos += j;
  }
  return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
  Graph g(n);
  int bitpos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bitpos)
      if ((key >> bitpos) & 1) g.add_edge(i, j);
  return g;
}

namespace {

// Every isomorphism class on k+1 vertices arises by attaching a new vertex
// with some neighborhood to a class on k vertices.
std::vector<std::uint64_t> enumerate_keys(int n) {
  std::vector<std::uint64_t> level{0};  // the one-vertex graph
  for (int k = 1; k < n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t parent : level) {
      for (std::uint32_t nbrs = 0; nbrs < (std::uint32_t{1} << k); ++nbrs) {
        Graph child(k + 1);
        int bitpos = 0;
        for (int j = 1; j < k; ++j)
          for (int i = 0; i < j; ++i, ++bitpos)
            if ((parent >> bitpos) & 1) child.add_edge(i, j);
        for (int i = 0; i < k; ++i)
          if ((nbrs >> i) & 1) child.add_edge(i, k);
        seen.insert(canonical_key(child));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

const std::vector<std::uint64_t>& cached_keys(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_keys(n)).first;
  return it->second;
}

}  // namespace

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 1 || n > kEnumerateMaxN)
    throw std::domain_error(
        "built-in enumeration covers 1 <= n <= 9; ingest larger orders from a graph6 file "
        "(hunt --source FILE)");
  std::vector<Graph> out;
  for (std::uint64_t key : cached_keys(n)) out.push_back(graph_from_key(n, key));
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> all = enumerate_all_graphs(n);
  std::vector<Graph> out;
  for (Graph& g : all)
    if (g.connected()) out.push_back(std::move(g));
  return out;
}

}  // namespace cyc

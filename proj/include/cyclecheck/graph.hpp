#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclecheck/bits.hpp"

namespace cyc {

// Hard cap on graph order. The exact solvers are exponential, so oversized
// inputs are rejected with CapacityError instead of silently grinding.
inline constexpr int kMaxVertices = 64;

struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is one 64-bit mask per vertex, so adjacency tests, neighborhood
/// intersections and component floods are single word operations. Graphs are
/// immutable after construction in all library code paths; every operation on
/// them is a pure function.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    if (n > kMaxVertices) throw CapacityError("Graph: order exceeds capacity");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
  }

  bool adjacent(int u, int v) const { return contains(adj_[static_cast<std::size_t>(u)], v); }

  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  int degree(int v) const { return popcount(adj_[static_cast<std::size_t>(v)]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  bool has_edges() const {
    for (int v = 0; v < n_; ++v)
      if (neighbors(v)) return true;
    return false;
  }

  VertexSet vertex_mask() const { return low_mask(n_); }

  /// Induced subgraph on `keep`, relabeled densely (ascending vertex order).
  Graph induced(VertexSet keep) const;

  /// Connected component of `start` inside the induced subgraph on `within`
  /// (start must be in `within`). Returned as a vertex mask of this graph.
  VertexSet component_of(int start, VertexSet within) const;

  /// All connected components of the induced subgraph on `within`.
  std::vector<VertexSet> components_within(VertexSet within) const;

  bool connected() const {
    if (n_ <= 1) return true;
    return component_of(0, vertex_mask()) == vertex_mask();
  }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);      // K_{1,leaves}, center = 0
Graph petersen_graph();

/// Disjoint union; blocks are relabeled consecutively in input order.
Graph disjoint_union(const std::vector<Graph>& parts);

/// Join: disjoint union of a and b (a first) plus all edges between them.
Graph join(const Graph& a, const Graph& b);

}  // namespace cyc

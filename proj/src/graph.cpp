#include "cyclecheck/graph.hpp"

namespace cyc {

Graph Graph::induced(VertexSet keep) const {
  keep &= vertex_mask();
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int m = 0;
  for (VertexSet s = keep; s; s &= s - 1) label[static_cast<std::size_t>(lowest_bit(s))] = m++;
  Graph out(m);
  for (VertexSet s = keep; s; s &= s - 1) {
    int v = lowest_bit(s);
    for (VertexSet t = neighbors(v) & keep & ~(low_mask(v + 1)); t; t &= t - 1)
      out.add_edge(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(lowest_bit(t))]);
  }
  return out;
}

VertexSet Graph::component_of(int start, VertexSet within) const {
  VertexSet comp = bit(start) & within;
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= neighbors(lowest_bit(s));
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> Graph::components_within(VertexSet within) const {
  std::vector<VertexSet> comps;
  VertexSet rest = within & vertex_mask();
  while (rest) {
    VertexSet c = component_of(lowest_bit(rest), rest);
    comps.push_back(c);
    rest &= ~c;
  }
  return comps;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer 5-cycle
    g.add_edge(i, i + 5);              // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.order();
  if (n > kMaxVertices) throw CapacityError("disjoint_union: order exceeds capacity");
  Graph g(n);
  int base = 0;
  for (const Graph& p : parts) {
    for (int u = 0; u < p.order(); ++u)
      for (VertexSet s = p.neighbors(u) & ~low_mask(u + 1); s; s &= s - 1)
        g.add_edge(base + u, base + lowest_bit(s));
    base += p.order();
  }
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union({a, b});
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

}  // namespace cyc

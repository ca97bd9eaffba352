#pragma once

#include <cstdint>
#include <vector>

#include "cyclecheck/graph.hpp"

namespace cyc {

/// Canonical form of a graph with n <= 11: the lexicographically smallest
/// upper-triangle adjacency bit string over all vertex orderings, packed into
/// one word (bit j(j-1)/2 + i set iff canonical vertices i < j are adjacent).
/// Two graphs have equal keys iff they are isomorphic.
std::uint64_t canonical_key(const Graph& g);

/// Rebuilds the graph encoded by a canonical key.
Graph graph_from_key(int n, std::uint64_t key);

/// One representative per isomorphism class of simple graphs on n vertices,
/// in ascending canonical-key order. Built-in range 1 <= n <= 9; larger
/// orders must be ingested from external graph6 files.
std::vector<Graph> enumerate_all_graphs(int n);

/// Connected classes only, same order and range as enumerate_all_graphs.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace cyc

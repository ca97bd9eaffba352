#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cyclecheck/graph.hpp"

namespace cyc {

/// Order of a cycle or path where single vertices (order 1) and single edges
/// (order 2) count as cycles. For a cycle order in a graph H:
///   0 = H empty, 1 = H non-empty and edgeless, 2 = H has an edge but no
///   standard cycle, k >= 3 = order of a longest standard cycle.
/// For a path order: 0 = H empty, else the longest path vertex count.
struct GeneralizedOrder {
  int value = 0;
  auto operator<=>(const GeneralizedOrder&) const = default;
};

/// Solver tier selection; Auto picks subset DP for n <= 20 and depth-first
/// branch and bound above. The explicit values exist so tests can cross-check
/// the two tiers against each other.
enum class SolverTier { Auto, SubsetDp, BranchBound };

struct LongestCycleResult {
  GeneralizedOrder order;
  std::vector<int> sequence;  // cyclic vertex sequence; empty when order <= 2
  std::vector<int> witness;   // vertex set of the witness (vertex/edge for orders 1-2)
};

struct LongestPathResult {
  GeneralizedOrder order;
  std::vector<int> sequence;
};

LongestCycleResult longest_cycle(const Graph& g, SolverTier tier = SolverTier::Auto);
LongestPathResult longest_path(const Graph& g, SolverTier tier = SolverTier::Auto);

GeneralizedOrder generalized_cycle_order(const Graph& g, SolverTier tier = SolverTier::Auto);
GeneralizedOrder generalized_path_order(const Graph& g, SolverTier tier = SolverTier::Auto);

/// True when `q` (a vertex mask) carries a generalized cycle of g: a single
/// vertex, an edge, or a vertex set with a spanning cycle of the induced
/// subgraph.
bool is_generalized_cycle_set(const Graph& g, VertexSet q);

struct RemainderParams {
  GeneralizedOrder c_bar;  // longest generalized cycle order in G - C
  GeneralizedOrder p_bar;  // longest path order in G - C
};

/// Orders of a longest cycle and a longest path in G minus the cycle's
/// vertex set. Throws std::invalid_argument when `cycle_set` is not a
/// generalized cycle of g.
RemainderParams remainder_params(const Graph& g, VertexSet cycle_set);

/// Same, without the contract check (for sets produced by the enumerator).
RemainderParams remainder_params_unchecked(const Graph& g, VertexSet cycle_set);

struct CycleSetEnumeration {
  std::vector<VertexSet> sets;  // ascending by mask value
  bool exhausted = true;        // false when `limit` stopped the enumeration
};

/// Every distinct vertex set carrying a longest generalized cycle. Orders 1
/// and 2 enumerate vertices and edges directly; order >= 3 collects all
/// subsets carrying a spanning cycle of maximum order. Stops after `limit`
/// sets with exhausted = false if more exist.
CycleSetEnumeration all_longest_cycle_sets(const Graph& g, std::size_t limit,
                                           SolverTier tier = SolverTier::Auto);

/// Longest cycle, its deterministic witness, and the remainder parameters of
/// that witness.
struct CycleReport {
  GeneralizedOrder c;
  GeneralizedOrder c_bar;
  GeneralizedOrder p_bar;
  std::vector<int> cycle;    // empty when c <= 2
  std::vector<int> witness;  // witness vertex set (sorted)
};

CycleReport analyze_cycles(const Graph& g, SolverTier tier = SolverTier::Auto);

/// D_lambda: every component of G - q has at most lambda-1 vertices.
bool is_d_lambda(const Graph& g, VertexSet q, int lambda);
/// PD_lambda: every path of order >= lambda meets q.
bool is_pd_lambda(const Graph& g, VertexSet q, int lambda);
/// CD_lambda: every generalized cycle of order >= lambda meets q.
bool is_cd_lambda(const Graph& g, VertexSet q, int lambda);

}  // namespace cyc

#pragma once

#include <vector>

#include "cyclecheck/graph.hpp"

namespace cyc {

/// Non-negative integer extended with +infinity; carries sigma_k values
/// (sigma_k = +infinity when the graph has no independent k-set).
struct ExtInt {
  bool infinite = false;
  long long value = 0;

  static ExtInt inf() { return {true, 0}; }
  static ExtInt of(long long v) { return {false, v}; }

  bool operator==(const ExtInt&) const = default;

  friend bool operator<(const ExtInt& a, const ExtInt& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
  friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }
};

/// Minimum degree. Undefined on the empty graph (throws std::domain_error).
int min_degree(const Graph& g);

/// Vertex connectivity. Total function: 0 for the empty, one-vertex and
/// disconnected graphs; n-1 for complete graphs; otherwise the minimum over
/// non-adjacent pairs of the maximum number of internally disjoint paths.
int vertex_connectivity(const Graph& g);

/// Size of a maximum independent vertex set (0 for the empty graph).
int independence_number(const Graph& g);

/// Minimum degree sum over independent k-sets; +infinity when alpha < k.
ExtInt sigma_k(const Graph& g, int k);

/// The scalar parameter tuple used by statement hypotheses.
struct GraphParams {
  int n = 0;
  int delta = 0;
  int kappa = 0;
  int alpha = 0;
  std::vector<long long> sigma;  // sigma[k-1] for k = 1..alpha (finite values)

  ExtInt sigma_value(int k) const {
    if (k < 1) throw std::invalid_argument("sigma_value: k must be positive");
    if (k > alpha) return ExtInt::inf();
    return ExtInt::of(sigma[static_cast<std::size_t>(k - 1)]);
  }
};

/// Computes (n, delta, kappa, alpha, sigma table). Requires n >= 1.
GraphParams compute_params(const Graph& g);

}  // namespace cyc

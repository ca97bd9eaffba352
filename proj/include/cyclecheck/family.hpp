#pragma once

#include <optional>
#include <string>

#include "cyclecheck/cycles.hpp"
#include "cyclecheck/graph.hpp"

namespace cyc {

/// The witness family (t+1)K_m + K_t: t+1 disjoint copies of K_m, every
/// vertex of which is joined to every vertex of a disjoint hub clique K_t.
struct FamilySpec {
  int m = 1;  // block order, >= 1
  int t = 1;  // hub order, >= 1

  bool operator==(const FamilySpec&) const = default;
};

/// Closed-form parameter predictions for a family graph. The general forms
/// in (m, t) are validated against the exact solvers before being trusted;
/// see cross_validate_family.
struct FamilyParams {
  int n = 0;
  int delta = 0;
  int kappa = 0;
  int c = 0;
  int c_bar = 0;
  int p_bar = 0;

  bool operator==(const FamilyParams&) const = default;
};

/// Builds the family graph. Vertex labeling: blocks first (block-major),
/// hub last. Throws std::invalid_argument for degenerate m or t, and
/// CapacityError when the order exceeds the solver capacity.
Graph build_family(FamilySpec spec);

/// n = (t+1)m+t, delta = m+t-1, kappa = t, c = t(m+1), c_bar = p_bar = m.
FamilyParams predict_params(FamilySpec spec);

/// Recomputes the six parameters with the exact solvers on the built graph
/// (c_bar/p_bar for the deterministic witness cycle).
FamilyParams exact_params(FamilySpec spec);

/// Compares predict_params against the exact solvers; additionally checks
/// that every longest cycle of the graph leaves the same remainder orders.
/// Returns an explanatory message on mismatch, nothing when confirmed.
std::optional<std::string> cross_validate_family(FamilySpec spec);

}  // namespace cyc

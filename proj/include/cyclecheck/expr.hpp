#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cyclecheck/invariants.hpp"

namespace cyc {

/// Exact rational (or +infinity) value of a bound expression. All hypothesis
/// and conclusion comparisons go through this type or through the dedicated
/// cross-multiplied forms below; nothing is ever evaluated in floating point.
struct Value {
  bool infinite = false;
  long long num = 0;
  long long den = 1;  // > 0, gcd-reduced

  static Value inf() { return {true, 0, 1}; }
  static Value integer(long long v) { return {false, v, 1}; }
  static Value ratio(long long num, long long den);
  static Value from(ExtInt v) { return v.infinite ? inf() : integer(v.value); }

  bool is_integer() const { return !infinite && den == 1; }

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);
  friend bool operator<(const Value& a, const Value& b);
  friend bool operator<=(const Value& a, const Value& b) { return a < b || a == b; }
  friend bool operator>(const Value& a, const Value& b) { return b < a; }
  friend bool operator>=(const Value& a, const Value& b) { return b <= a; }

  std::string str() const;
};

Value min_value(const Value& a, const Value& b);

struct EvalContext {
  int lambda = 1;
  const GraphParams* params = nullptr;  // may be null for (n, delta)-only contexts
  int n = 0;
  int delta = 0;
  int kappa = 0;

  static EvalContext of(const GraphParams& p, int lambda) {
    return {lambda, &p, p.n, p.delta, p.kappa};
  }
  static EvalContext scalars(int n, int delta, int lambda) { return {lambda, nullptr, n, delta, 0}; }

  ExtInt sigma(int k) const;
};

/// Closed bound expression over {lambda, delta, kappa, n, sigma_k} with
/// integer constants, +, -, *, min, and the rational form (n+2)/(lambda+1).
///
/// Prefix text syntax (whitespace separated, operators have fixed arity):
///   expr := INT | lambda | delta | kappa | n | nfrac
///         | sigma expr | + expr expr | - expr expr | * expr expr | min expr expr
/// where nfrac denotes (n+2)/(lambda+1).
class BoundExpr {
 public:
  BoundExpr() = default;

  /// Parses the prefix syntax; throws std::invalid_argument on bad input.
  static BoundExpr parse(std::string_view text);

  Value evaluate(const EvalContext& ctx) const;

  std::string to_prefix() const;  // round-trips through parse
  std::string display() const;    // infix, for reports

  bool empty() const { return nodes_.empty(); }

 private:
  enum class Op { Const, Lambda, Delta, Kappa, N, NFrac, Sigma, Add, Sub, Mul, Min };
  struct Node {
    Op op;
    long long value = 0;  // Const only
    int a = -1, b = -1;   // child indices
  };

  Value eval_node(int idx, const EvalContext& ctx) const;
  void print_prefix(int idx, std::string& out) const;
  void print_display(int idx, std::string& out) const;

  std::vector<Node> nodes_;  // nodes_[root_] is the root
  int root_ = -1;
};

/// Eq.(1) degree condition, delta >= (n+2)/(lambda+1) + lambda - 2, decided
/// exactly by cross-multiplication: (lambda+1)(delta-lambda+2) >= n+2.
bool degree_condition_holds(int n, int delta, int lambda);

/// Eq.(2) boundary, delta == (n+1)/(lambda+1) + lambda - 2, decided exactly:
/// (lambda+1)(delta-lambda+2) == n+1.
bool on_eq2_boundary(int n, int delta, int lambda);

/// The right-hand side of Eq.(1) as an exact rational, (n+2)/(lambda+1) +
/// lambda - 2. Independent evaluation route used to validate the
/// cross-multiplied forms.
Value eq1_rhs_rational(int n, int lambda);
Value eq2_rhs_rational(int n, int lambda);

}  // namespace cyc

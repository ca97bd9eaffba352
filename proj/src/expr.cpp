#include "cyclecheck/expr.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyc {

Value Value::ratio(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Value: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {false, num, den};
}

Value operator+(const Value& a, const Value& b) {
  if (a.infinite || b.infinite) return Value::inf();
  return Value::ratio(a.num * b.den + b.num * a.den, a.den * b.den);
}

Value operator-(const Value& a, const Value& b) {
  if (b.infinite) throw std::domain_error("Value: cannot subtract infinity");
  if (a.infinite) return Value::inf();
  return Value::ratio(a.num * b.den - b.num * a.den, a.den * b.den);
}

Value operator*(const Value& a, const Value& b) {
  if (a.infinite || b.infinite) {
    const Value& fin = a.infinite ? b : a;
    if (!fin.infinite && fin.num <= 0)
      throw std::domain_error("Value: infinity times non-positive");
    return Value::inf();
  }
  return Value::ratio(a.num * b.num, a.den * b.den);
}

bool operator==(const Value& a, const Value& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return a.num == b.num && a.den == b.den;
}

bool operator<(const Value& a, const Value& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.num * b.den < b.num * a.den;  // denominators positive
}

std::string Value::str() const {
  if (infinite) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Value min_value(const Value& a, const Value& b) { return b < a ? b : a; }

ExtInt EvalContext::sigma(int k) const {
  if (!params) throw std::logic_error("EvalContext: sigma needs full graph params");
  return params->sigma_value(k);
}

BoundExpr BoundExpr::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("BoundExpr: empty expression");

  BoundExpr expr;
  std::size_t pos = 0;
  auto parse_node = [&](auto&& self) -> int {
    if (pos >= tokens.size()) throw std::invalid_argument("BoundExpr: unexpected end of input");
    const std::string& tok = tokens[pos++];
    Node node;
    if (tok == "lambda") node.op = Op::Lambda;
    else if (tok == "delta") node.op = Op::Delta;
    else if (tok == "kappa") node.op = Op::Kappa;
    else if (tok == "n") node.op = Op::N;
    else if (tok == "nfrac") node.op = Op::NFrac;
    else if (tok == "sigma") {
      node.op = Op::Sigma;
      node.a = self(self);
    } else if (tok == "+" || tok == "-" || tok == "*" || tok == "min") {
      node.op = tok == "+" ? Op::Add : tok == "-" ? Op::Sub : tok == "*" ? Op::Mul : Op::Min;
      node.a = self(self);
      node.b = self(self);
    } else {
      std::size_t used = 0;
      try {
        node.value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("BoundExpr: bad token '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("BoundExpr: bad token '" + tok + "'");
      node.op = Op::Const;
    }
    expr.nodes_.push_back(node);
    return static_cast<int>(expr.nodes_.size()) - 1;
  };
  expr.root_ = parse_node(parse_node);
  if (pos != tokens.size()) throw std::invalid_argument("BoundExpr: trailing tokens");
  return expr;
}

Value BoundExpr::eval_node(int idx, const EvalContext& ctx) const {
  const Node& node = nodes_[static_cast<std::size_t>(idx)];
  switch (node.op) {
    case Op::Const: return Value::integer(node.value);
    case Op::Lambda: return Value::integer(ctx.lambda);
    case Op::Delta: return Value::integer(ctx.delta);
    case Op::Kappa: return Value::integer(ctx.kappa);
    case Op::N: return Value::integer(ctx.n);
    case Op::NFrac: return Value::ratio(ctx.n + 2, ctx.lambda + 1);
    case Op::Sigma: {
      Value k = eval_node(node.a, ctx);
      if (!k.is_integer() || k.num < 1)
        throw std::domain_error("BoundExpr: sigma subscript must be a positive integer");
      return Value::from(ctx.sigma(static_cast<int>(k.num)));
    }
    case Op::Add: return eval_node(node.a, ctx) + eval_node(node.b, ctx);
    case Op::Sub: return eval_node(node.a, ctx) - eval_node(node.b, ctx);
    case Op::Mul: return eval_node(node.a, ctx) * eval_node(node.b, ctx);
    case Op::Min: return min_value(eval_node(node.a, ctx), eval_node(node.b, ctx));
  }
  throw std::logic_error("BoundExpr: bad node");
}

Value BoundExpr::evaluate(const EvalContext& ctx) const {
  if (root_ < 0) throw std::logic_error("BoundExpr: empty expression");
  return eval_node(root_, ctx);
}

void BoundExpr::print_prefix(int idx, std::string& out) const {
  const Node& node = nodes_[static_cast<std::size_t>(idx)];
  auto word = [&](std::string_view w) {
    if (!out.empty()) out.push_back(' ');
    out.append(w);
  };
  switch (node.op) {
    case Op::Const: word(std::to_string(node.value)); return;
    case Op::Lambda: word("lambda"); return;
    case Op::Delta: word("delta"); return;
    case Op::Kappa: word("kappa"); return;
    case Op::N: word("n"); return;
    case Op::NFrac: word("nfrac"); return;
    case Op::Sigma: word("sigma"); print_prefix(node.a, out); return;
    case Op::Add: word("+"); break;
    case Op::Sub: word("-"); break;
    case Op::Mul: word("*"); break;
    case Op::Min: word("min"); break;
  }
  print_prefix(node.a, out);
  print_prefix(node.b, out);
}

std::string BoundExpr::to_prefix() const {
  std::string out;
  if (root_ >= 0) print_prefix(root_, out);
  return out;
}

void BoundExpr::print_display(int idx, std::string& out) const {
  const Node& node = nodes_[static_cast<std::size_t>(idx)];
  switch (node.op) {
    case Op::Const: out += std::to_string(node.value); return;
    case Op::Lambda: out += "lambda"; return;
    case Op::Delta: out += "delta"; return;
    case Op::Kappa: out += "kappa"; return;
    case Op::N: out += "n"; return;
    case Op::NFrac: out += "(n+2)/(lambda+1)"; return;
    case Op::Sigma:
      out += "sigma_(";
      print_display(node.a, out);
      out += ")";
      return;
    case Op::Min:
      out += "min{";
      print_display(node.a, out);
      out += ",";
      print_display(node.b, out);
      out += "}";
      return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul: {
      const char* op = node.op == Op::Add ? "+" : node.op == Op::Sub ? "-" : "*";
      out += "(";
      print_display(node.a, out);
      out += op;
      print_display(node.b, out);
      out += ")";
      return;
    }
  }
}

std::string BoundExpr::display() const {
  std::string out;
  if (root_ >= 0) print_display(root_, out);
  return out;
}

bool degree_condition_holds(int n, int delta, int lambda) {
  return static_cast<long long>(lambda + 1) * (delta - lambda + 2) >= n + 2;
}

bool on_eq2_boundary(int n, int delta, int lambda) {
  return static_cast<long long>(lambda + 1) * (delta - lambda + 2) == n + 1;
}

Value eq1_rhs_rational(int n, int lambda) {
  return Value::ratio(n + 2, lambda + 1) + Value::integer(lambda - 2);
}

Value eq2_rhs_rational(int n, int lambda) {
  return Value::ratio(n + 1, lambda + 1) + Value::integer(lambda - 2);
}

}  // namespace cyc

#include <doctest.h>

#include <random>

#include "cyclecheck/expr.hpp"

using namespace cyc;

TEST_CASE("rational values are exact") {
  CHECK(Value::ratio(6, 4) == Value::ratio(3, 2));
  CHECK(Value::ratio(7, 3) > Value::integer(2));
  CHECK(Value::ratio(7, 3) < Value::ratio(12, 5));
  CHECK((Value::ratio(1, 2) + Value::ratio(1, 3)) == Value::ratio(5, 6));
  CHECK((Value::integer(2) * Value::ratio(3, 4)) == Value::ratio(3, 2));
  CHECK((Value::integer(1) - Value::ratio(1, 2)) == Value::ratio(1, 2));
  CHECK(Value::inf() > Value::integer(1 << 30));
  CHECK((Value::inf() - Value::integer(5)) == Value::inf());
  CHECK(min_value(Value::inf(), Value::integer(3)) == Value::integer(3));
  CHECK(Value::ratio(5, 2).str() == "5/2");
}

TEST_CASE("prefix parser round-trips") {
  for (const char* text : {"- lambda 1", "+ - delta lambda 1", "min lambda + - delta lambda 2",
                           "* lambda + - delta lambda 2", "- sigma lambda * lambda - lambda 2",
                           "min - lambda 1 + - delta lambda 1", "nfrac", "42"}) {
    BoundExpr e = BoundExpr::parse(text);
    CHECK(e.to_prefix() == text);
  }
  CHECK_THROWS_AS(BoundExpr::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BoundExpr::parse("+ lambda"), std::invalid_argument);
  CHECK_THROWS_AS(BoundExpr::parse("lambda 3"), std::invalid_argument);
  CHECK_THROWS_AS(BoundExpr::parse("bogus"), std::invalid_argument);
}

TEST_CASE("expression evaluation") {
  EvalContext ctx = EvalContext::scalars(11, 4, 2);
  CHECK(BoundExpr::parse("- lambda 1").evaluate(ctx) == Value::integer(1));
  CHECK(BoundExpr::parse("+ - delta lambda 2").evaluate(ctx) == Value::integer(4));
  CHECK(BoundExpr::parse("* lambda + - delta lambda 2").evaluate(ctx) == Value::integer(8));
  CHECK(BoundExpr::parse("min - lambda 1 - delta lambda").evaluate(ctx) == Value::integer(1));
  CHECK(BoundExpr::parse("nfrac").evaluate(ctx) == Value::ratio(13, 3));
}

TEST_CASE("sigma expressions honor the infinity convention") {
  GraphParams p;
  p.n = 6;
  p.delta = 2;
  p.alpha = 2;
  p.sigma = {2, 5};
  EvalContext ctx = EvalContext::of(p, 2);
  CHECK(BoundExpr::parse("sigma lambda").evaluate(ctx) == Value::integer(5));
  CHECK(BoundExpr::parse("sigma + lambda 1").evaluate(ctx) == Value::inf());
  CHECK(BoundExpr::parse("- sigma + lambda 1 * lambda - lambda 2").evaluate(ctx) == Value::inf());
}

TEST_CASE("degree condition arithmetic on the documented boundary cases") {
  // C_6 at lambda=2: 3*(2-2+2)=6 < 8 fails
  CHECK_FALSE(degree_condition_holds(6, 2, 2));
  // K_4 at lambda=1: 2*(3-1+2)=8 >= 6 holds
  CHECK(degree_condition_holds(4, 3, 1));
  // family (m=1,t=4) at lambda=2, delta=4: 3*4=12 >= 11 holds
  CHECK(degree_condition_holds(9, 4, 2));
  // the delta-sharp witness sits exactly one short of Eq.(1)
  CHECK(on_eq2_boundary(11, 4, 2));
  CHECK_FALSE(degree_condition_holds(11, 4, 2));
}

TEST_CASE("cross-multiplied forms equal rational evaluation") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    int n = static_cast<int>(rng() % 1000000);
    int delta = static_cast<int>(rng() % 1000000);
    int lambda = 1 + static_cast<int>(rng() % 1000);
    CHECK(degree_condition_holds(n, delta, lambda) ==
          (Value::integer(delta) >= eq1_rhs_rational(n, lambda)));
    CHECK(on_eq2_boundary(n, delta, lambda) ==
          (Value::integer(delta) == eq2_rhs_rational(n, lambda)));
  }
}

#include <doctest.h>

#include <random>

#include "superlie/expr.hpp"

using namespace superlie;

namespace {

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 10);
  std::uniform_int_distribution<long> num(0, 7), den(1, 4);
  switch (pick(rng)) {
    case 0: return Expr::lit(make_rational(num(rng), den(rng)));
    case 1: return Expr::leaf(ExprKind::I);
    case 2: return Expr::leaf(ExprKind::Sqrt2);
    case 3: return Expr::leaf(ExprKind::T);
    case 4: return Expr::unary(ExprKind::Neg, random_expr(rng, depth - 1));
    case 5: return Expr::binary(ExprKind::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6: return Expr::binary(ExprKind::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return Expr::binary(ExprKind::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 8: return Expr::binary(ExprKind::Div, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 9: return Expr::pow(random_expr(rng, depth - 1), make_rational(num(rng) - 3, den(rng) == 3 ? 2 : den(rng)));
    default: return Expr::unary(ExprKind::Sqrt, random_expr(rng, depth - 1));
  }
}

Series eval(const char* text) { return expr_eval(*expr_parse(text)); }

}  // namespace

TEST_CASE("parse shapes") {
  auto e = expr_parse("t^(-1)/2");
  REQUIRE(e->kind == ExprKind::Div);
  CHECK(e->lhs->kind == ExprKind::Pow);
  CHECK(e->lhs->value == -1);
  CHECK(e->rhs->kind == ExprKind::Lit);
  auto n = expr_parse("-i*t^(1/2)");
  REQUIRE(n->kind == ExprKind::Neg);
  REQUIRE(n->lhs->kind == ExprKind::Mul);
  CHECK(n->lhs->lhs->kind == ExprKind::I);
  CHECK(n->lhs->rhs->value == make_rational(1, 2));
  auto s = expr_parse("sqrt((1+sqrt(2*t))/(1-sqrt(2*t)))");
  REQUIRE(s->kind == ExprKind::Sqrt);
  CHECK(s->lhs->kind == ExprKind::Div);
}

TEST_CASE("syntax errors carry positions") {
  try {
    expr_parse("t^(1/2");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(expr_parse("2*"), SyntaxError);
  CHECK_THROWS_AS(expr_parse("e1"), SyntaxError);
  CHECK_NOTHROW(expr_parse("e1 + t*f2", {true}));
}

TEST_CASE("format") {
  CHECK(expr_format(*Expr::pow(Expr::leaf(ExprKind::T), make_rational(1, 2))) == "t^(1/2)");
  CHECK(expr_format(*Expr::unary(ExprKind::Neg, Expr::leaf(ExprKind::I))) == "-i");
  CHECK(expr_format(*Expr::binary(ExprKind::Mul, Expr::lit(2), Expr::leaf(ExprKind::T))) == "2*t");
}

TEST_CASE("evaluation examples") {
  CHECK(eval("t^(-1)/2") == Series::monomial(make_rational(1, 2), -1));
  CHECK(eval("i/sqrt(2)") == Series(field_parse("1/2*i*sqrt2")));
  Series alpha = eval("sqrt(t) + i*sqrt(1-t)");
  CHECK(alpha.coeff(0) == FieldElem::i());
  CHECK(alpha.coeff(make_rational(1, 2)) == FieldElem(1));
  CHECK(alpha.coeff(1) == field_parse("-1/2*i"));
  Series lhs = alpha * alpha + Series(1);
  Series rhs = Series(2) * alpha * eval("t^(1/2)");
  CHECK(lhs.agrees_with(rhs));
  try {
    eval("1 + 1/(t - t)");
    FAIL("no throw");
  } catch (const EvalError& e) {
    CHECK(e.kind() == EvalFailure::NotInvertible);
    CHECK(e.subexpr() == "t - t");
  }
  CHECK_THROWS_AS(eval("sqrt(3*t)"), EvalError);
}

TEST_CASE("vector mode") {
  auto v = expr_eval_vector(*expr_parse("t^(1/2)*(-e1+e2)", {true}), 2, 2);
  CHECK(v[0] == Series::monomial(-1, make_rational(1, 2)));
  CHECK(v[1] == Series::monomial(1, make_rational(1, 2)));
  CHECK(v[2].is_exact_zero());
  CHECK_THROWS_AS(expr_eval_vector(*expr_parse("e1*f1", {true}), 2, 2), EvalError);
}

TEST_CASE("round trip and homomorphism on random trees") {
  std::mt19937_64 rng(5150);
  int evaluated = 0;
  for (int k = 0; k < 1500; ++k) {
    ExprPtr e = random_expr(rng, 4);
    std::string text = expr_format(*e);
    ExprPtr back = expr_parse(text);
    REQUIRE_MESSAGE(expr_equal(*e, *back), text);
    ExprPtr f = random_expr(rng, 2);
    try {
      Series x = expr_eval(*e), y = expr_eval(*f);
      Series sum = expr_eval(*Expr::binary(ExprKind::Add, e, f));
      Series prod = expr_eval(*Expr::binary(ExprKind::Mul, e, f));
      REQUIRE(sum.agrees_with(x + y));
      REQUIRE(prod.agrees_with(x * y));
      Series sq = expr_eval(*Expr::pow(Expr::unary(ExprKind::Sqrt, e), 2));
      REQUIRE(sq.agrees_with(x));
      ++evaluated;
    } catch (const EvalError&) {
    }
  }
  CHECK(evaluated > 300);
}

#include <doctest.h>

#include <random>

#include "superlie/scalars.hpp"

using namespace superlie;

namespace {

FieldElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6), zero(0, 3);
  auto q = [&] { return zero(rng) == 0 ? Rational(0) : make_rational(num(rng), den(rng)); };
  return {q(), q(), q(), q()};
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  FieldElem one_i = field_parse("1 + i"), one_mi = field_parse("1 - i");
  CHECK(one_i * one_mi == FieldElem(2));
  CHECK(field_arith(1, FieldElem::i(), ArithOp::Div) == -FieldElem::i());
  FieldElem h = field_parse("sqrt2/2");
  CHECK(h * h == FieldElem(make_rational(1, 2)));
  CHECK_THROWS_AS(field_arith(1, 0, ArithOp::Div), DivisionByZero);
}

TEST_CASE("field sqrt examples") {
  CHECK(*field_sqrt(2) == FieldElem::sqrt2());
  CHECK(*field_sqrt(-1) == FieldElem::i());
  CHECK(*field_sqrt(make_rational(1, 2)) == field_parse("sqrt2/2"));
  CHECK_FALSE(field_sqrt(3).has_value());
  CHECK(*field_sqrt(FieldElem::i()) == field_parse("1/2*sqrt2 + 1/2*i*sqrt2"));
  CHECK_FALSE(field_sqrt(FieldElem::sqrt2()).has_value());
  CHECK(*field_sqrt(field_parse("3 + 2*sqrt2")) == field_parse("1 + sqrt2"));
  CHECK(*field_sqrt(field_parse("2*i")) == field_parse("1 + i"));
  CHECK(*field_sqrt(0) == FieldElem(0));
}

TEST_CASE("parse and format") {
  CHECK(field_parse("-1/2*i") == FieldElem(0, make_rational(-1, 2), 0, 0));
  CHECK(field_parse("sqrt2/2") == FieldElem(0, 0, make_rational(1, 2), 0));
  CHECK(field_parse("3/4 + i*sqrt2") == FieldElem(make_rational(3, 4), 0, 0, 1));
  CHECK(field_format(FieldElem(make_rational(3, 4), 0, 0, 1)) == "3/4 + i*sqrt2");
  CHECK(field_format(FieldElem(0, make_rational(-1, 2), 0, 0)) == "-1/2*i");
  CHECK(field_format(FieldElem()) == "0");
  CHECK_THROWS_AS(field_parse("1 + "), SyntaxError);
  CHECK_THROWS_AS(field_parse("2 * x"), SyntaxError);
  try {
    field_parse("1 + )");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20241);
  for (int k = 0; k < 1000; ++k) {
    FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * y == y * x);
    if (!x.is_zero()) REQUIRE(x * x.inverse() == FieldElem(1));
    REQUIRE(field_parse(field_format(x)) == x);
    FieldElem sq = x * x;
    auto r = field_sqrt(sq);
    REQUIRE(r.has_value());
    REQUIRE(*r * *r == sq);
    REQUIRE((*r == x || *r == -x));
    if (auto s = field_sqrt(x)) REQUIRE(*s * *s == x);
  }
}

#include <doctest.h>

#include <random>

#include "superlie/series.hpp"

using namespace superlie;

namespace {

Series mono(const FieldElem& c, long p, long q = 1) { return Series::monomial(c, make_rational(p, q)); }

Series random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), ex(0, 6), count(1, 4);
  const long leads[] = {1, 16, -1, 81};
  Series s = mono(leads[std::abs(num(rng)) % 4], ex(rng) - 2, 2);
  for (long k = 0, n = count(rng); k < n; ++k) s += mono(FieldElem(num(rng), 0, num(rng), 0), ex(rng) + 9, 4);
  return s;
}

}  // namespace

TEST_CASE("series arithmetic examples") {
  Series t = Series::t();
  CHECK(t * series_inv(t) == Series(1));
  Series a = Series(1) + t;
  CHECK((a - a).is_zero_to_precision());
  Series r = mono(FieldElem::sqrt2(), 1, 2);
  CHECK(r * r == mono(2, 1));
}

TEST_CASE("series inverse") {
  CHECK(series_inv(Series::t()) == mono(1, -1));
  Series x = Series(1) - mono(FieldElem::sqrt2(), 1, 2);
  Series inv = series_inv(x);
  CHECK(inv.coeff(0) == FieldElem(1));
  CHECK(inv.coeff(make_rational(1, 2)) == FieldElem::sqrt2());
  CHECK(inv.coeff(1) == FieldElem(2));
  CHECK((x * inv).agrees_with(Series(1)));
  CHECK_THROWS_AS(series_inv(Series()), NotInvertible);
  CHECK_THROWS_AS(series_inv(Series::zero_to(3)), NotInvertible);
}

TEST_CASE("series sqrt") {
  CHECK(*series_sqrt(mono(2, 1)) == mono(FieldElem::sqrt2(), 1, 2));
  CHECK_FALSE(series_sqrt(mono(3, 1)).has_value());
  Series s2 = mono(FieldElem::sqrt2(), 1, 2);
  Series q = (Series(1) + s2) * series_inv(Series(1) - s2);
  Series r = *series_sqrt(q);
  CHECK(r.coeff(0) == FieldElem(1));
  CHECK(r.coeff(make_rational(1, 2)) == FieldElem::sqrt2());
  CHECK(r.coeff(1) == FieldElem(1));
  CHECK((r * r).agrees_with(q));
}

TEST_CASE("limits") {
  CHECK(series_limit_at_zero(Series(1) + Series::t()).value == FieldElem(1));
  CHECK(series_limit_at_zero(mono(1, -1)).diverges);
  auto l = series_limit_at_zero(mono(1, 1, 2));
  CHECK_FALSE(l.diverges);
  CHECK(l.value.is_zero());
  CHECK_THROWS_AS(series_limit_at_zero(Series::zero_to(0)), InsufficientPrecision);
}

TEST_CASE("precision soundness and identities on random series") {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 1000; ++k) {
    Series x = random_series(rng), y = random_series(rng);
    Series inv = series_inv(x);
    REQUIRE((x * inv).agrees_with(Series(1)));
    Series inv_hi = series_inv(x, 16);
    REQUIRE(inv_hi.agrees_with(inv));
    REQUIRE(((x + y) * y).agrees_with(x * y + y * y));
    if (auto s = series_sqrt(x)) {
      REQUIRE((*s * *s).agrees_with(x));
      REQUIRE(series_sqrt(x, 16)->agrees_with(*s));
    }
    Series p = series_pow(x, make_rational(3, 4));
    Series p4 = series_pow(p, 4);
    REQUIRE(p4.agrees_with(x * x * x));
  }
}

#include <doctest.h>

#include <random>

#include "superlie/poly.hpp"

using namespace superlie;

TEST_CASE("univariate helpers") {
  UPoly p({-1, 0, 1});  // x^2 - 1
  UPoly q({1, 1});
  CHECK(gcd(p, q) == q);
  CHECK(is_squarefree(p));
  CHECK_FALSE(is_squarefree(q * q));
  CHECK(squarefree_part(q * q * p) == p);
  auto roots = roots_upto_quadratic(UPoly({1, 0, 1}));
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(r * r == FieldElem(-1));
}

TEST_CASE("ideal triviality examples") {
  PolySystem a{{"x"}, {MPoly::var(1, 0), MPoly::var(1, 0) - MPoly::constant(1, 1)}};
  CHECK(ideal_triviality(a) == Triviality::Empty);
  MPoly x = MPoly::var(2, 0), y = MPoly::var(2, 1);
  CHECK(ideal_triviality({{"x", "y"}, {x * y}}) == Triviality::NonEmpty);
  CHECK(ideal_triviality({{"x", "y"}, {x * x + y * y, x * y, x + y}}) == Triviality::NonEmpty);
  MPoly one = MPoly::constant(2, 1);
  CHECK(ideal_triviality({{"x", "y"}, {x * y - one, x}}) == Triviality::Empty);
  CHECK(ideal_triviality({{"x", "y"}, {x * x - y, y * y - x, x * y - one}}) == Triviality::NonEmpty);
}

TEST_CASE("empty systems have no rational sample solutions") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> c(-2, 2);
  int empties = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<MPoly> ps;
    for (int j = 0; j < 3; ++j) {
      MPoly p = MPoly::constant(2, c(rng));
      for (std::size_t v = 0; v < 2; ++v) p = p + MPoly::constant(2, c(rng)) * MPoly::var(2, v);
      p = p + MPoly::constant(2, c(rng)) * MPoly::var(2, 0) * MPoly::var(2, 1);
      ps.push_back(p);
    }
    auto res = ideal_triviality({{"x", "y"}, ps});
    REQUIRE(res != Triviality::Unknown);
    if (res != Triviality::Empty) continue;
    ++empties;
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        bool all_zero = true;
        for (const auto& p : ps) all_zero = all_zero && p.eval({a, b}).is_zero();
        REQUIRE_FALSE(all_zero);
      }
  }
  CHECK(empties > 10);
}

#include <doctest.h>

#include <random>

#include "superlie/exactla.hpp"

using namespace superlie;

namespace {

FMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  FMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  auto res = rref(from_rows({{1, 1}, {1, 1}}));
  CHECK(res.rank == 1);
  REQUIRE(res.kernel.size() == 1);
  CHECK(res.kernel[0] == FVector{-1, 1});
  CHECK(rref(FMatrix::identity(3)).kernel.empty());
  CHECK(rref(FMatrix(2, 3)).kernel.size() == 3);
}

TEST_CASE("rref properties on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> v(-3, 3), dim(1, 5);
  for (int k = 0; k < 300; ++k) {
    FMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = FieldElem(v(rng), v(rng) == 0 ? 1 : 0, 0, 0);
    auto res = rref(m);
    REQUIRE(res.rank + res.kernel.size() == m.cols());
    REQUIRE(rref(res.reduced).reduced == res.reduced);
    for (const auto& kv : res.kernel)
      for (const auto& x : mat_vec(m, kv)) REQUIRE(x.is_zero());
    if (m.rows() == m.cols() && res.rank == m.rows()) {
      REQUIRE(m * inverse(m) == FMatrix::identity(m.rows()));
      REQUIRE_FALSE(determinant(m).is_zero());
    }
  }
}

TEST_CASE("solve over series") {
  SMatrix m(2, 2);
  m(0, 0) = Series::t();
  m(1, 1) = Series(1);
  auto x = solve_series(m, {Series(1), Series(1)});
  CHECK(x[0] == Series::monomial(1, -1));
  CHECK(x[1] == Series(1));
  SMatrix s(2, 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) s(r, c) = Series::t();
  CHECK_THROWS_AS(solve_series(s, {Series(1), Series(1)}), Singular);
  SMatrix id = SMatrix::identity(3);
  std::vector<Series> b{Series(2), Series::t(), Series(FieldElem::i())};
  CHECK(solve_series(id, b) == b);
}

TEST_CASE("series inverse reproduces identity") {
  SMatrix m(2, 2);
  m(0, 0) = Series(1) + Series::t();
  m(0, 1) = Series::monomial(1, make_rational(1, 2));
  m(1, 0) = Series(2);
  m(1, 1) = Series::t();
  SMatrix inv = inverse_series(m, 10);
  SMatrix prod = m * inv;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(prod(r, c).agrees_with(Series(r == c ? 1 : 0)));
}

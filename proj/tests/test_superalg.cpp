#include <doctest.h>

#include <random>

#include "superlie/catalog.hpp"
#include "superlie/expr.hpp"
#include "superlie/superalg.hpp"
#include "random_support.hpp"

using namespace superlie;
using namespace superlie::testing;

namespace {

GradedVector unit(const SuperAlgebra& g, const std::string& sym) {
  GradedVector v(g.dim());
  v[parse_basis_symbol(g.m(), g.n(), sym)] = 1;
  return v;
}

}  // namespace

TEST_CASE("bracket examples") {
  const SuperAlgebra& h = get("(1|1)_1").algebra;
  CHECK(bracket(h, unit(h, "f1"), unit(h, "f1")) == unit(h, "e1"));
  CHECK(bracket(h, unit(h, "e1"), unit(h, "e1")) == GradedVector(2));
  const SuperAlgebra& g = get("(1|2)_3").algebra;
  GradedVector minus_f1 = unit(g, "f1");
  minus_f1[1] = -1;
  CHECK(bracket(g, unit(g, "f2"), unit(g, "e1")) == minus_f1);
  CHECK_THROWS_AS(bracket(g, GradedVector(2), unit(g, "e1")), DimensionMismatch);
}

TEST_CASE("set_bracket enforces the grading") {
  SuperAlgebra g(1, 1);
  CHECK_THROWS_AS(g.set_bracket(0, 1, {1, 0}), InvalidAlgebra);
  CHECK_THROWS_AS(g.set_bracket(0, 0, {1, 0}), InvalidAlgebra);
  g.set_bracket(1, 1, {1, 0});
  CHECK(g.gamma(0, 0, 0) == FieldElem(1));
}

TEST_CASE("from_tensors validates symmetry") {
  std::vector<FieldElem> c(8), rho(2), gamma(2);
  c[(0 * 2 + 1) * 2 + 0] = 1;  // [e1,e2]=e1 without the mirrored entry
  CHECK_THROWS_AS(from_tensors(2, 1, c, rho, gamma), InvalidAlgebra);
  c[(1 * 2 + 0) * 2 + 0] = -1;
  CHECK_NOTHROW(from_tensors(2, 1, c, rho, gamma));
}

TEST_CASE("Jacobi on catalog and tampered algebras") {
  for (const auto& e : list_all()) {
    INFO(e.label);
    CHECK(check_jacobi(e.algebra).empty());
    CHECK(check_J1_J2(e.algebra).ok());
  }
  CHECK(check_jacobi(SuperAlgebra(2, 3)).empty());

  // Flipping [e2,f3]=f1 alone is the image under e2 -> -e2 and still satisfies Jacobi.
  SuperAlgebra flipped = get("(2|3)_24").algebra;
  GradedVector v(5);
  v[2] = -1;
  flipped.set_bracket(1, 4, v);
  CHECK(check_jacobi(flipped).empty());

  SuperAlgebra bad = get("(2|3)_24").algebra;
  GradedVector e1(5);
  e1[0] = 1;
  bad.set_bracket(4, 4, e1);
  CHECK_FALSE(check_jacobi(bad).empty());
  CHECK_FALSE(check_J1_J2(bad).ok());

  const SuperAlgebra& g18 = get("(2|3)_18").algebra;
  CHECK(check_J1_J2(g18).ok());
}

TEST_CASE("Jacobi and triple-form checks agree on random tensors") {
  std::mt19937 rng(20261017);
  std::uniform_int_distribution<int> shape(0, 3), coin(0, 5);
  int passing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + shape(rng) % 3, n = 1 + shape(rng) % 3;
    SuperAlgebra g(m, n);
    if (trial % 2 == 0) {
      // Catalog algebra in a random basis with one random perturbation.
      std::vector<const CatalogEntry*> pool = list({m, n});
      if (!pool.empty()) {
        g = apply_basis_change(pool[rng() % pool.size()]->algebra, random_graded(rng, m, n));
      }
    }
    if (trial % 4 != 0) {
      std::size_t N = m + n;
      std::size_t a = rng() % N, b = rng() % N;
      if (a == b && a < m) b = (a + 1) % N;
      if (a == b && a < m) continue;
      bool parity = (a >= m) != (b >= m);
      std::vector<FieldElem> val(N);
      for (std::size_t k = 0; k < N; ++k)
        if ((k >= m) == parity && coin(rng) < 2) val[k] = small(rng);
      g.set_bracket(a, b, val);
    }
    bool j = check_jacobi(g).empty();
    bool t = check_J1_J2(g).ok();
    passing += j;
    CHECK(j == t);
  }
  CHECK(passing > 20);
}

TEST_CASE("lower central series") {
  auto lcs = lower_central_series(get("(1|2)_3").algebra);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[0] == GradedDim{1, 2});
  CHECK(lcs[1] == GradedDim{0, 1});
  CHECK(lcs[2] == GradedDim{0, 0});
  CHECK(is_nilpotent(get("(1|2)_3").algebra));
  auto ab_lcs = lower_central_series(SuperAlgebra(2, 2));
  CHECK(ab_lcs.back() == GradedDim{0, 0});

  SuperAlgebra d(1, 2);
  d.set_bracket(0, 2, {0, 1, 0});
  d.set_bracket(0, 1, {0, 0, 1});
  auto dl = lower_central_series(d);
  CHECK(dl.back() == GradedDim{0, 2});
  CHECK_FALSE(is_nilpotent(d));

  for (const auto& e : list_all()) {
    auto s = lower_central_series(e.algebra);
    for (std::size_t k = 1; k < s.size(); ++k) {
      CHECK(s[k].even <= s[k - 1].even);
      CHECK(s[k].odd <= s[k - 1].odd);
    }
    CHECK(is_nilpotent(e.algebra));
  }
}

TEST_CASE("ab and F functors") {
  SuperAlgebra a = ab(get("(2|2)_6").algebra);
  FMatrix swap = block_diag(FMatrix::identity(2), FMatrix(2, 2));
  swap(2, 3) = 1;
  swap(3, 2) = 1;
  CHECK(apply_basis_change(a, swap) == get("(2|2)_3").algebra);
  CHECK(F(SuperAlgebra(2, 1)) == SuperAlgebra(2, 1));
  for (const auto& e : list_all()) CHECK(ab(F(e.algebra)) == SuperAlgebra(e.algebra.m(), e.algebra.n()));
}

TEST_CASE("basis change") {
  const SuperAlgebra& g = get("(1|2)_2").algebra;
  CHECK(apply_basis_change(g, FMatrix::identity(3)) == g);

  SMatrix M(3, 3);
  auto col = [&](std::size_t c, const std::string& text) {
    auto v = expr_eval_vector(*expr_parse(text, {true}), 1, 2);
    for (std::size_t r = 0; r < 3; ++r) M(r, c) = v[r];
  };
  col(0, "e1");
  col(1, "f1 + 1/2*f2");
  col(2, "t*f2");
  SeriesAlgebra h = apply_basis_change(g, M);
  CHECK(h.at(1, 1, 0) == Series(1));
  CHECK(h.at(1, 2, 0) == Series::t());
  CHECK(h.at(2, 2, 0).is_exact_zero());
  CHECK(describe(h) == "[f1,f1]=e1, [f1,f2]=t*e1");

  // t*id scales every constant by t.
  for (const char* label : {"(2|3)_24", "(3|2)_13", "(5|0)_3"}) {
    const SuperAlgebra& a = get(label).algebra;
    SMatrix T = Series::t() * SMatrix::identity(a.dim());
    SeriesAlgebra s = apply_basis_change(a, T);
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y)
        for (std::size_t k = 0; k < a.dim(); ++k) CHECK(s.at(x, y, k) == Series(a.at(x, y, k)) * Series::t());
  }

  CHECK_THROWS_AS(apply_basis_change(g, FMatrix(3, 3) + FMatrix::identity(3) + [] {
                    FMatrix x(3, 3);
                    x(0, 1) = 1;
                    return x;
                  }()),
                  InvalidAlgebra);
  FMatrix sing = FMatrix::identity(3);
  sing(2, 2) = 0;
  CHECK_THROWS_AS(apply_basis_change(g, sing), Singular);
}

TEST_CASE("basis change is a group action") {
  std::mt19937 rng(7);
  const auto& all = list_all();
  for (int trial = 0; trial < 200; ++trial) {
    const SuperAlgebra& g = all[rng() % all.size()].algebra;
    FMatrix M = random_graded(rng, g.m(), g.n());
    FMatrix M2 = random_graded(rng, g.m(), g.n());
    CHECK(apply_basis_change(apply_basis_change(g, M), M2) == apply_basis_change(g, M * M2));
  }
}

TEST_CASE("describe") {
  CHECK(describe(get("(1|1)_1").algebra) == "[f1,f1]=e1");
  CHECK(describe(SuperAlgebra(1, 1)) == "abelian");
  CHECK(describe(get("(3|2)_13").algebra) == "[e1,e2]=e3, [e1,f2]=f1, [f1,f2]=e3, [f2,f2]=2*e2");
}

#include <doctest.h>

#include <random>
#include <set>

#include "random_support.hpp"
#include "superlie/catalog.hpp"
#include "superlie/cohomology.hpp"
#include "superlie/gamma23.hpp"
#include "superlie/invariants.hpp"

using namespace superlie;
using namespace superlie::gamma23;
using namespace superlie::testing;

namespace {

FMatrix mat(std::initializer_list<std::initializer_list<FieldElem>> rows) {
  FMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

const SymPair& rep(const std::string& label) {
  for (const auto& r : representatives())
    if (r.label == label) return r.pair;
  throw std::out_of_range(label);
}

FMatrix random_symmetric(std::mt19937& rng) {
  FMatrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = r; c < 3; ++c) m(r, c) = m(c, r) = small(rng);
  return m;
}

const FieldElem I = FieldElem::i();

}  // namespace

TEST_CASE("pair_act") {
  const SymPair& p = rep("(2|3)_11");
  CHECK(pair_act(FMatrix::identity(2), FMatrix::identity(3), p) == p);
  SymPair swapped = pair_act(mat({{0, 1}, {1, 0}}), FMatrix::identity(3), p);
  CHECK(swapped.g1 == p.g2);
  CHECK(swapped.g2 == p.g1);
  CHECK_THROWS_AS(pair_act(mat({{1, 1}, {1, 1}}), FMatrix::identity(3), p), Singular);
  CHECK_THROWS_AS(make_pair(mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), FMatrix(3, 3)), InvalidAlgebra);

  // The action matches the algebra basis change with even block T^-1.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FMatrix T = random_invertible(rng, 2), S = random_invertible(rng, 3);
    SymPair q = make_pair(random_symmetric(rng), random_symmetric(rng));
    CHECK(pair_to_algebra(pair_act(T, S, q)) == apply_basis_change(pair_to_algebra(q), block_diag(inverse(T), S)));
    CHECK(algebra_to_pair(pair_to_algebra(q)) == q);
  }
  CHECK_THROWS_AS(algebra_to_pair(get("(2|3)_12").algebra), InvalidAlgebra);
}

TEST_CASE("reduction of (id, G) with a non-diagonalizable G") {
  for (const FieldElem& lambda : {FieldElem(0), FieldElem(2), I}) {
    for (const FieldElem& mu : {FieldElem(0), FieldElem(1), lambda}) {
      for (const FieldElem& c : {FieldElem(0), FieldElem(1)}) {
        if (lambda != mu && !c.is_zero()) continue;
        FMatrix D = Delta(lambda);
        FMatrix G = mat({{D(0, 0), D(0, 1), c}, {D(1, 0), D(1, 1), I * c}, {c, I * c, mu}});
        SymPair out = pair_act(T_lambda(lambda), S0(), {FMatrix::identity(3), G});
        CHECK(out.g1 == mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
        // The off-diagonal column is -i*sqrt2*c*u0.
        FieldElem off = -I * FieldElem::sqrt2() * c;
        CHECK(out.g2 == mat({{0, 0, 0}, {0, 2, off}, {0, off, lambda - mu}}));
      }
    }
  }
}

TEST_CASE("simultaneous diagonalizability") {
  CHECK(simdiag_test(I1(), I2()));
  CHECK_FALSE(simdiag_test(rep("(2|3)_7")));
  CHECK(simdiag_test(FMatrix(3, 3), FMatrix(3, 3)));
  for (const auto& r : representatives()) {
    int k = std::stoi(r.label.substr(6));
    CHECK(simdiag_test(r.pair) == (k <= 6));
  }
  std::mt19937 rng(5);
  for (const auto& r : representatives())
    for (int trial = 0; trial < 20; ++trial) {
      SymPair q = pair_act(random_invertible(rng, 2), random_invertible(rng, 3), r.pair);
      CHECK(simdiag_test(q) == simdiag_test(r.pair));
    }
  CHECK(is_squarefree(minimal_polynomial(mat({{1, 0}, {0, 2}}))));
  CHECK_FALSE(is_squarefree(minimal_polynomial(mat({{1, 1}, {0, 1}}))));
  CHECK(minimal_polynomial(FMatrix::identity(3)).degree() == 1);
}

TEST_CASE("symmetric normal form") {
  auto d = sym_normal_form(mat({{1, 0}, {0, 2}}));
  REQUIRE(d);
  CHECK(d->diagonal);
  CHECK(d->form == mat({{1, 0}, {0, 2}}));

  auto n = sym_normal_form(mat({{1, I}, {I, -1}}));
  REQUIRE(n);
  CHECK_FALSE(n->diagonal);
  CHECK(n->eigenvalues == std::vector<FieldElem>{0});
  CHECK(n->form == Delta(0));

  auto k = sym_normal_form(mat({{0, 1}, {1, 0}}));
  REQUIRE(k);
  CHECK(k->diagonal);
  CHECK(k->form(0, 1).is_zero());
  CHECK(std::set<std::string>{field_format(k->form(0, 0)), field_format(k->form(1, 1))} ==
        std::set<std::string>{"1", "-1"});

  // Non-diagonalizable 3x3 cases, conjugated by a rational orthogonal matrix.
  FMatrix Q = FieldElem(make_rational(1, 5)) * mat({{3, -4, 0}, {4, 3, 0}, {0, 0, 5}});
  FMatrix P = FieldElem(make_rational(1, 3)) * mat({{1, 2, 2}, {2, 1, -2}, {2, -2, 1}});
  for (const FMatrix& O : {FMatrix::identity(3), Q, P, Q * P}) {
    for (int variant = 0; variant < 3; ++variant) {
      FieldElem lambda = variant == 0 ? FieldElem(3) : FieldElem(-1);
      FieldElem mu = variant == 0 ? FieldElem(1) : lambda;
      FieldElem c = variant == 2 ? FieldElem(1) : FieldElem(0);
      FMatrix D = Delta(lambda);
      FMatrix F = mat({{D(0, 0), D(0, 1), c}, {D(1, 0), D(1, 1), I * c}, {c, I * c, mu}});
      FMatrix A = O * F * O.transpose();
      auto nf = sym_normal_form(A);
      REQUIRE(nf);
      CHECK_FALSE(nf->diagonal);
      CHECK(nf->S.transpose() * nf->S == FMatrix::identity(3));
      CHECK(nf->c == c);
      CHECK(nf->form == F);
    }
  }
  auto diag3 = sym_normal_form(Q * mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}) * Q.transpose());
  REQUIRE(diag3);
  CHECK(diag3->diagonal);
  CHECK(diag3->S.transpose() * diag3->S == FMatrix::identity(3));
  CHECK(diag3->form == mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  CHECK_FALSE(sym_normal_form(mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 1}})));  // char poly has no roots in the field
}

TEST_CASE("representatives classify to distinct labels") {
  std::set<std::string> labels;
  for (const auto& r : representatives()) {
    auto l = classify_pair(r.pair);
    REQUIRE(l);
    CHECK(*l == r.label);
    labels.insert(*l);
  }
  CHECK(labels.size() == 12);
  CHECK(classify_pair({FMatrix(3, 3), FMatrix(3, 3)}) == "(2|3)_0");
  CHECK(classify_pair({I1(), I2()}) == "(2|3)_4");
  CHECK(signature(rep("(2|3)_10")).det_partition == std::vector<int>{2, 1});
  CHECK(signature(rep("(2|3)_11")).det_partition == std::vector<int>{3});
  CHECK(signature(rep("(2|3)_6")).det_partition == std::vector<int>{1, 1, 1});
  CHECK(signature(rep("(2|3)_8")).minor_gcd_degree == 0);
  CHECK(signature(rep("(2|3)_7")).minor_gcd_degree == 2);
}

TEST_CASE("classification is constant on orbits") {
  std::mt19937 rng(20261017);
  std::size_t mismatches = 0, total = 0;
  for (const auto& r : representatives())
    for (int trial = 0; trial < 200; ++trial) {
      SymPair q = pair_act(random_invertible(rng, 2), random_invertible(rng, 3), r.pair);
      auto l = classify_pair(q);
      ++total;
      if (!l || *l != r.label) ++mismatches;
    }
  CHECK(total == 2400);
  CHECK(mismatches == 0);
}

TEST_CASE("representatives match the catalog") {
  for (const auto& r : representatives()) {
    INFO(r.label);
    SuperAlgebra g = pair_to_algebra(r.pair);
    const SuperAlgebra& h = get(r.label).algebra;
    CHECK(g == h);
    CHECK(center(g).dim == center(h).dim);
    CHECK(derived(g) == derived(h));
    CHECK(orbit_dim(g) == orbit_dim(h));
    CHECK(h2_even(g).dim == h2_even(h).dim);
    CHECK(classify_pair(algebra_to_pair(h)) == r.label);
  }
}

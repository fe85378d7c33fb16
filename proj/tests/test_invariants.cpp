#include <doctest.h>

#include <random>

#include "random_support.hpp"
#include "superlie/catalog.hpp"
#include "superlie/invariants.hpp"

using namespace superlie;
using namespace superlie::testing;

namespace {

bool brackets_to_zero(const SuperAlgebra& g, const GradedVector& v) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    GradedVector u(g.dim());
    u[a] = 1;
    for (const auto& x : bracket(g, v, u))
      if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("center") {
  GradedSpace z = center(get("(1|2)_3").algebra);
  CHECK(z.dim == GradedDim{0, 1});
  REQUIRE(z.basis.size() == 1);
  CHECK(format_vector(get("(1|2)_3").algebra, z.basis[0]) == "f1");
  GradedSpace z2 = center(get("(2|2)_5").algebra);
  CHECK(z2.dim == GradedDim{1, 1});
  CHECK(center(get("(2|3)_0").algebra).dim == GradedDim{2, 3});
  for (const auto& e : list_all()) {
    GradedSpace c = center(e.algebra);
    for (const auto& v : c.basis) CHECK(brackets_to_zero(e.algebra, v));
  }
}

TEST_CASE("derived algebra and gamma") {
  CHECK(derived(get("(1|2)_2").algebra) == GradedDim{1, 0});
  CHECK(derived(get("(1|2)_3").algebra) == GradedDim{0, 1});
  CHECK(derived(get("(0|4)_0").algebra) == GradedDim{0, 0});
  CHECK(gamma_is_zero(get("(1|2)_3").algebra));
  CHECK_FALSE(gamma_is_zero(get("(1|2)_2").algebra));
  CHECK(gamma_is_zero(get("(3|0)_0").algebra));
  for (const auto& e : list_all()) CHECK(derived(e.algebra) == lower_central_series(e.algebra).at(1));
}

TEST_CASE("abc derivations") {
  const SuperAlgebra& h = get("(1|1)_1").algebra;
  DerivationSpace d = abc_derivations(h, 1, 1, 1, 0);
  REQUIRE(d.dim == 1);
  const FMatrix& D = d.basis[0];
  CHECK(D(0, 0) == FieldElem(2) * D(1, 1));
  CHECK_FALSE(D(1, 1).is_zero());
  for (const auto& [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {1, 2}, {2, 3}}) {
    SuperAlgebra a(m, n);
    for (const auto& t : default_abc_tuples()) CHECK(abc_derivations(a, t[0], t[1], t[2], 0).dim == m * m + n * n);
    CHECK(abc_derivations(a, 1, 1, 1, 1).dim == 2 * m * n);
  }
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dim(get("(1|1)_1").algebra) == 1);
  CHECK(orbit_dim(get("(3|0)_1").algebra) == 3);
  for (const auto& e : list_all())
    if (e.label.substr(e.label.size() - 2) == "_0") CHECK(orbit_dim(e.algebra) == 0);
  const auto& known = expected().orbit_dim_known;
  for (const auto& [label, dim] : expected().orbit_dim) {
    INFO(label);
    auto it = known.find(label);
    CHECK(orbit_dim(get(label).algebra) == (it == known.end() ? dim : it->second));
  }
  for (const auto& [label, dim] : expected().orbit_dim_regression) {
    INFO(label);
    CHECK(orbit_dim(get(label).algebra) == dim);
  }
}

TEST_CASE("largest trivial subalgebra") {
  TrivialSubResult h = trivial_sub_max(get("(1|1)_1").algebra);
  CHECK(h.exact == 1u);
  CHECK(h.witness == "span{e1}");
  TrivialSubResult r = trivial_sub_max(get("(2|3)_2").algebra);
  CHECK(r.exact == 4u);
  CHECK(r.lower == 4u);
  CHECK(r.witness == "span{e1, e2, f1 + i*f2, f3}");
  CHECK(trivial_sub_max(get("(2|3)_0").algebra).exact == 5u);
  // Case III values.
  const std::map<int, std::size_t> want = {{2, 4}, {3, 3}, {4, 3}, {5, 3}, {7, 4}, {8, 4}, {9, 3}, {10, 3}, {19, 3}};
  for (const auto& [k, t] : want) {
    INFO(k);
    TrivialSubResult x = trivial_sub_max(get("(2|3)_" + std::to_string(k)).algebra);
    CHECK(x.exact == t);
    CHECK(x.undecided.empty());
  }
  TrivialSubResult s19 = trivial_sub_max(get("(2|3)_19").algebra);
  TrivialSubResult s3 = trivial_sub_max(get("(2|3)_3").algebra);
  CHECK(s19.profile.count({1, 2}));
  CHECK(s3.excluded.count({1, 2}));
}

TEST_CASE("invariants survive basis change") {
  std::mt19937 rng(314159);
  const auto& all = list_all();
  for (int k = 0; k < 220; ++k) {
    const SuperAlgebra& g = all[rng() % all.size()].algebra;
    SuperAlgebra h = apply_basis_change(g, random_graded(rng, g.m(), g.n()));
    CHECK(center(h).dim == center(g).dim);
    CHECK(derived(h) == derived(g));
    CHECK(orbit_dim(h) == orbit_dim(g));
    CHECK(gamma_is_zero(h) == gamma_is_zero(g));
    CHECK(abc_derivations(h, 0, 1, -1, 1).dim == abc_derivations(g, 0, 1, -1, 1).dim);
  }
}

TEST_CASE("report") {
  InvariantReport r = invariant_report(get("(2|2)_6").algebra);
  CHECK(r.orbit_dim == 4);
  CHECK(r.der0_dim == 4);
  CHECK(r.abc_entries.size() == 6);
  std::string j = report_json(r, "(2|2)_6");
  CHECK(j.find("\"orbit_dim\": 4") != std::string::npos);
  CHECK(j.find("(2|2)_6") != std::string::npos);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "superlie/catalog.hpp"

using namespace superlie;

TEST_CASE("catalog sizes") {
  CHECK(list_all().size() == 99);
  std::map<std::string, std::size_t> want = {{"(2|0)", 1}, {"(1|1)", 2}, {"(0|2)", 1}, {"(3|0)", 2}, {"(2|1)", 2},
                                             {"(1|2)", 4}, {"(0|3)", 1}, {"(4|0)", 3}, {"(3|1)", 4}, {"(2|2)", 7},
                                             {"(1|3)", 6}, {"(0|4)", 1}, {"(5|0)", 9}, {"(4|1)", 7}, {"(1|4)", 9},
                                             {"(0|5)", 1}, {"(3|2)", 14}, {"(2|3)", 25}};
  std::size_t dim2 = 0, dim3 = 0, dim4 = 0;
  for (const auto& [d, count] : want) {
    GradedDim g = label_dims(d);
    CHECK(list(g).size() == count);
    if (g.total() == 2) dim2 += count;
    if (g.total() == 3) dim3 += count;
    if (g.total() == 4) dim4 += count;
  }
  CHECK(dim2 == 4);
  CHECK(dim3 == 9);
  CHECK(dim4 == 21);
  CHECK(catalog_dims().size() == want.size());
}

TEST_CASE("get and NotFound") {
  const CatalogEntry& e = get("(3|2)_13");
  CHECK(e.algebra.m() == 3);
  CHECK(e.algebra.n() == 2);
  CHECK(e.algebra.at(4, 4, 1) == FieldElem(2));
  CHECK(e.h2_dim == 0);
  CHECK(e.orbit_dim == 8);
  CHECK_THROWS_AS(get("(9|9)_0"), NotFound);
  CHECK_THROWS_AS(get("garbage"), NotFound);
  std::set<std::string> labels;
  for (const auto& x : list_all()) labels.insert(x.label);
  CHECK(labels.size() == 99);
}

TEST_CASE("labels order numerically") {
  CHECK(label_less("(2|3)_2", "(2|3)_10"));
  CHECK(label_less("(3|2)_13", "(2|3)_0"));
  CHECK_FALSE(label_less("(2|3)_10", "(2|3)_10"));
}

TEST_CASE("witness and table references resolve") {
  for (const auto& w : builtin_witnesses()) {
    INFO(w.from << " -> " << w.to);
    const CatalogEntry& a = get(w.from);
    const CatalogEntry& b = get(w.to);
    CHECK(a.algebra.m() == b.algebra.m());
    CHECK(a.algebra.n() == b.algebra.n());
    CHECK(w.basis.size() == a.algebra.dim());
  }
  for (const auto& r : nondegen_rows()) {
    INFO(r.from << " -/-> " << r.to);
    CHECK(label_dims(get(r.from).label) == label_dims(get(r.to).label));
  }
  for (const auto& [d, labels] : expected().components)
    for (const auto& l : labels) CHECK(label_dims(get(l).label) == label_dims(d));
  for (const auto& [l, v] : expected().orbit_dim) CHECK_NOTHROW(get(l));
}

TEST_CASE("algebra documents round-trip") {
  for (const auto& e : list_all()) {
    SuperAlgebra g = parse_algebra_document(algebra_document(e.algebra));
    CHECK(g == e.algebra);
  }
  CHECK_THROWS_AS(parse_algebra_document("{\"m\": 1"), ParseError);
  CHECK_THROWS_AS(parse_algebra_document("{\"m\": 1, \"n\": 1, \"brackets\": [{\"lhs\": \"e1\", \"rhs\": \"f1\", "
                                         "\"value\": [{\"coeff\": \"1\", \"basis\": \"e1\"}]}]}"),
                  InvalidAlgebra);
}

TEST_CASE("witness documents") {
  WitnessSpec w = parse_witness_document(R"({"from": "(1|2)_2", "to": "(1|2)_1", "basis": {"y2": "t*f2"}})");
  REQUIRE(w.basis.size() == 3);
  CHECK(w.basis[0].second == "e1");
  CHECK(w.basis[2].second == "t*f2");
  CHECK_THROWS_AS(parse_witness_document(R"({"from": "(1|2)_2", "to": "(1|2)_1", "basis": {"y3": "f1"}})"),
                  ParseError);
  auto ws = find_witnesses("(3|1)_3", "(3|1)_1");
  REQUIRE(ws.size() == 2);
  CHECK(ws[0]->source == "published");
  CHECK(ws[1]->source == "correction");
}

TEST_CASE("families") {
  CHECK(heisenberg_1n(1) == get("(1|1)_1").algebra);
  for (std::size_t n = 1; n <= 6; ++n) {
    SuperAlgebra h = heisenberg_1n(n);
    auto lcs = lower_central_series(h);
    REQUIRE(lcs.size() == 3);
    CHECK(lcs[1] == GradedDim{1, 0});
    CHECK(check_jacobi(h).empty());
  }
  for (std::size_t m : {1, 3, 5, 7}) {
    SuperAlgebra k = K2m(m);
    CHECK(check_jacobi(k).empty());
    CHECK(is_nilpotent(k));
  }
  CHECK_THROWS_AS(K2m(2), MEven);
}

TEST_CASE("resource export") {
  auto dir = std::filesystem::temp_directory_path() / "superlie_export_test";
  auto paths = export_resources(dir.string());
  CHECK(paths.size() == 4);
  std::ifstream f(dir / "catalog.json");
  std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body == resource("catalog.json"));
  std::filesystem::remove_all(dir);
}

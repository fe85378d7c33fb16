#include <doctest.h>

#include <algorithm>

#include "superlie/catalog.hpp"
#include "superlie/orbitrel.hpp"

using namespace superlie;

namespace {

WitnessSpec witness(const std::string& from, const std::string& to, std::vector<std::string> basis) {
  WitnessSpec w;
  w.from = from;
  w.to = to;
  GradedDim d = label_dims(from);
  for (std::size_t k = 0; k < basis.size(); ++k)
    w.basis.emplace_back(k < d.even ? "x" + std::to_string(k + 1) : "y" + std::to_string(k - d.even + 1), basis[k]);
  return w;
}

const KnownWitness* known_witness(const std::string& from, const std::string& to) {
  for (const auto& k : expected().witness_known)
    if (k.from == from && k.to == to) return &k;
  return nullptr;
}

bool known_row(const NonDegRow& r) {
  for (const auto& k : expected().known_discrepancies)
    if (k.from == r.from && k.to == r.to && k.criterion == r.criterion) return true;
  return false;
}

}  // namespace

TEST_CASE("verify_degeneration examples") {
  auto r = verify_degeneration(witness("(1|2)_2", "(1|2)_1", {"e1", "f1 + 1/2*f2", "t*f2"}));
  CHECK(r.verified());
  for (const char* label : {"(1|1)_1", "(2|3)_24", "(3|2)_13", "(5|0)_3"}) {
    GradedDim d = label_dims(label);
    std::vector<std::string> id, scaled;
    for (std::size_t k = 0; k < d.even; ++k) {
      id.push_back("e" + std::to_string(k + 1));
      scaled.push_back("t*e" + std::to_string(k + 1));
    }
    for (std::size_t k = 0; k < d.odd; ++k) {
      id.push_back("f" + std::to_string(k + 1));
      scaled.push_back("t*f" + std::to_string(k + 1));
    }
    CHECK(verify_degeneration(witness(label, label, id)).verified());
    std::string abelian = "(" + std::to_string(d.even) + "|" + std::to_string(d.odd) + ")_0";
    CHECK(verify_degeneration(witness(label, abelian, scaled)).verified());
  }
  auto radical = find_witnesses("(2|3)_6", "(2|3)_10");
  REQUIRE(radical.size() == 1);
  CHECK(verify_degeneration(*radical.front()).verified());
}

TEST_CASE("verify_degeneration failures") {
  auto wrong = verify_degeneration(witness("(1|1)_1", "(1|1)_0", {"e1", "f1"}));
  CHECK(wrong.status == VerifyStatus::WrongLimit);
  CHECK(wrong.pair == "[f1,f1]");
  CHECK(wrong.got == "e1");
  CHECK(wrong.expected == "0");

  auto div = verify_degeneration(witness("(1|1)_1", "(1|1)_1", {"e1", "t^(-1)*f1"}));
  CHECK(div.status == VerifyStatus::Diverges);
  CHECK(div.pair == "[f1,f1]");

  CHECK(verify_degeneration(witness("(1|2)_2", "(1|2)_1", {"e1", "f1", "2*f1"})).status == VerifyStatus::Singular);
  CHECK(verify_degeneration(witness("(1|1)_1", "(1|1)_1", {"e1 + f1", "f1"})).status == VerifyStatus::NotGraded);
  CHECK_THROWS_AS(verify_degeneration(witness("(1|1)_1", "(1|2)_1", {"e1", "f1"})), DimensionMismatch);
  CHECK(wrong.message().find("wrong limit at [f1,f1]") != std::string::npos);
}

TEST_CASE("let bindings") {
  CHECK(substitute_let("Q*f1 + sqrt(Q2) - aQ", "Q", "1 - t") == "(1 - t)*f1 + sqrt(Q2) - aQ");
  WitnessSpec w = witness("(1|1)_1", "(1|1)_1", {"a^2*e1", "a*f1"});
  w.let = {{"a", {"0", "2", "1"}}};
  auto r = verify_degeneration(w);
  CHECK(r.verified());
  CHECK(r.let_choice == std::vector<std::string>{"2"});
  w.basis[0].second = "e1";
  r = verify_degeneration(w);
  CHECK(r.verified());
  CHECK(r.let_choice == std::vector<std::string>{"1"});
  w.let = {{"a", {"0", "3"}}};
  CHECK_FALSE(verify_degeneration(w).verified());
}

TEST_CASE("precision retry") {
  for (const auto* w : find_witnesses("(2|3)_6", "(2|3)_10")) {
    CHECK(verify_with_retry(*w, Rational(1, 2), 6).verified());
    CHECK_THROWS_AS(verify_with_retry(*w, Rational(1, 8), 0), InsufficientPrecision);
  }
}

TEST_CASE("builtin witnesses") {
  std::size_t published = 0, failed = 0;
  for (const auto& w : builtin_witnesses()) {
    INFO(w.from << " -> " << w.to << " [" << w.source << "]");
    published += w.source == "published";
    auto r = verify_with_retry(w);
    const KnownWitness* k = w.source == "published" ? known_witness(w.from, w.to) : nullptr;
    if (k) {
      ++failed;
      CHECK_FALSE(r.verified());
      CHECK(k->status == "WrongLimit");
      CHECK(r.status == VerifyStatus::WrongLimit);
    } else {
      CHECK(r.verified());
    }
  }
  CHECK(failed == expected().witness_known.size());
  CHECK(published >= 80);
  for (const auto& k : expected().witness_known) {
    bool corrected = false;
    for (const auto* w : find_witnesses(k.from, k.to)) corrected |= w->source == "correction";
    CHECK(corrected);
  }
}

TEST_CASE("auto_nondegen examples") {
  auto c = auto_nondegen(get("(1|2)_2").algebra, get("(1|2)_3").algebra);
  auto derived_odd = std::find_if(c.begin(), c.end(), [](const auto& x) { return x.criterion == "derived" && x.parity == 1; });
  REQUIRE(derived_odd != c.end());
  CHECK(derived_odd->g_value == "0");
  CHECK(derived_odd->h_value == "1");

  auto g = auto_nondegen(get("(1|3)_1").algebra, get("(1|3)_3").algebra);
  CHECK(std::any_of(g.begin(), g.end(), [](const auto& x) { return x.criterion == "gamma_zero"; }));

  for (const auto& e : list_all()) CHECK(auto_nondegen(e.algebra, e.algebra).empty());

  // Equal centers force equal (0,1,0)-derivation dimensions.
  NonDegOptions only010;
  only010.abc_tuples = {{FieldElem(0), FieldElem(1), FieldElem(0)}};
  for (const auto& x : auto_nondegen(get("(2|3)_10").algebra, get("(2|3)_11").algebra, only010))
    CHECK(x.criterion != "abc_derivation");
  auto five_eight = auto_nondegen(get("(2|3)_5").algebra, get("(2|3)_8").algebra);
  CHECK(std::any_of(five_eight.begin(), five_eight.end(), [](const auto& x) {
    return x.criterion == "abc_derivation" && x.parity == 0 && x.abc && (*x.abc)[2] == FieldElem(-1);
  }));
  CHECK_THROWS_AS(auto_nondegen(get("(1|2)_2").algebra, get("(2|1)_1").algebra), DimensionMismatch);
}

TEST_CASE("cited criteria of the non-degeneration tables") {
  std::size_t rows = 0;
  for (const auto& r : nondegen_rows()) {
    GradedDim d = label_dims(r.from);
    if (d.even + d.odd > 4 && d != GradedDim{3, 2} && d != GradedDim{4, 1} && d != GradedDim{1, 4}) continue;
    INFO(r.from << " -/-> " << r.to << " [" << r.criterion << "]");
    CHECK_FALSE(cited_certificates(r).empty());
    ++rows;
  }
  CHECK(rows > 40);
  CHECK(certificate_criterion("abc") == "abc_derivation");
  CHECK_THROWS_AS(certificate_criterion("item9"), std::invalid_argument);
}

TEST_CASE("hasse diagrams") {
  HasseDiagram h12 = build_hasse({1, 2});
  std::vector<std::pair<std::string, std::string>> want = {
      {"(1|2)_1", "(1|2)_0"}, {"(1|2)_2", "(1|2)_1"}, {"(1|2)_3", "(1|2)_0"}};
  auto got = h12.edges;
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK(h12.reaches("(1|2)_2", "(1|2)_0"));
  CHECK_FALSE(h12.reaches("(1|2)_3", "(1|2)_1"));

  CHECK(build_hasse({2, 0}).edges.empty());
  HasseDiagram h11 = build_hasse({1, 1});
  CHECK(h11.edges == std::vector<std::pair<std::string, std::string>>{{"(1|1)_1", "(1|1)_0"}});
  CHECK(build_hasse({0, 3}).edges.empty());

  for (const auto& [shape, labels] : expected().components) {
    GradedDim d = label_dims(labels.front());
    HasseDiagram h = build_hasse(d);
    INFO(shape);
    for (const auto& e : h.verified) CHECK(h.orbit_dim.at(e.from) > h.orbit_dim.at(e.to));
    for (const auto& [a, b] : h.closure)
      if (a != b) CHECK_FALSE(h.reaches(b, a));
    std::size_t published_failures = 0;
    for (const auto& [pair, msg] : h.failures) {
      CHECK(msg.rfind("Failed", 0) == 0);
      ++published_failures;
    }
    std::size_t known = 0;
    for (const auto& k : expected().witness_known) known += label_dims(k.from) == d;
    CHECK(published_failures == known);
    CHECK(components(h).labels == labels);
  }
}

TEST_CASE("verified pairs satisfy every necessary condition") {
  for (const GradedDim d : {GradedDim{2, 2}, GradedDim{1, 3}, GradedDim{3, 2}, GradedDim{2, 3}}) {
    HasseDiagram h = build_hasse(d, false);
    for (const auto& [a, b] : h.closure) {
      if (a == b) continue;
      INFO(a << " -> " << b);
      CHECK(auto_nondegen(get(a).algebra, get(b).algebra).empty());
    }
  }
}

TEST_CASE("dot export") {
  HasseDiagram h = build_hasse({2, 2});
  std::string dot = hasse_dot(h);
  CHECK(dot == hasse_dot(build_hasse({2, 2})));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  for (const auto& [a, b] : h.edges) CHECK(dot.find("\"" + a + "\" -> \"" + b + "\"") != std::string::npos);
}

TEST_CASE("discrepancy report") {
  for (const GradedDim d : {GradedDim{1, 1}, GradedDim{2, 1}, GradedDim{1, 2}, GradedDim{3, 1}, GradedDim{2, 2},
                            GradedDim{1, 3}, GradedDim{4, 0}})
    CHECK(discrepancy_report(d).empty());
  auto case3 = discrepancy_report(GradedDim{2, 3});
  CHECK_FALSE(case3.empty());
  for (const auto& row : case3) {
    INFO(row.row.from << " -/-> " << row.row.to);
    CHECK(row.known.has_value());
    CHECK(known_row(row.row));
  }
  auto it = std::find_if(case3.begin(), case3.end(),
                         [](const auto& x) { return x.row.from == "(2|3)_4" && x.row.to == "(2|3)_3"; });
  REQUIRE(it != case3.end());
  CHECK(it->status() == "alternative");
  CHECK(it->alternatives.front().criterion == "center");
  it = std::find_if(case3.begin(), case3.end(),
                    [](const auto& x) { return x.row.from == "(2|3)_7" && x.row.to == "(2|3)_2"; });
  REQUIRE(it != case3.end());
  CHECK(it->status() == "refuted");
}

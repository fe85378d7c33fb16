#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "random_support.hpp"
#include "superlie/catalog.hpp"
#include "superlie/cohomology.hpp"
#include "superlie/expr.hpp"
#include "superlie/gamma23.hpp"
#include "superlie/invariants.hpp"
#include "superlie/orbitrel.hpp"

using namespace superlie;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    pass = false;
    notes.push_back(s);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

bool skew_symmetric(const SuperAlgebra& g) {
  const std::size_t N = g.m() + g.n();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      bool sym = a >= g.m() && b >= g.m();
      for (std::size_t k = 0; k < N; ++k)
        if (g.at(a, b, k) != (sym ? g.at(b, a, k) : -g.at(b, a, k))) return false;
    }
  return true;
}

bool axioms(const SuperAlgebra& g) {
  bool jac = check_jacobi(g).empty();
  return skew_symmetric(g) && jac && check_J1_J2(g).ok() == jac && is_nilpotent(g);
}

Outcome catalog_integrity() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t n = 0;
  for (const auto& e : list_all()) {
    ++n;
    if (!axioms(e.algebra)) o.fail(e.label + " violates the axioms");
  }
  double s = seconds_since(t0);
  if (n != 99) o.fail(std::to_string(n) + " algebras instead of 99");
  if (s >= 5) o.fail("took " + fmt_seconds(s));
  o.notes.insert(o.notes.begin(), std::to_string(n) + " algebras in " + fmt_seconds(s));
  return o;
}

Outcome cohomology_regression() {
  Outcome o;
  const ExpectedTables& ex = expected();
  for (const auto& [label, want] : ex.h2_even) {
    std::size_t got = h2_even(get(label).algebra).dim;
    if (got != static_cast<std::size_t>(want))
      o.fail(label + ": computed " + std::to_string(got) + ", published " + std::to_string(want));
  }
  for (const auto& [label, texts] : ex.cocycles) {
    const SuperAlgebra& g = get(label).algebra;
    CocycleCheck c = validate_cocycles(g, texts);
    for (std::size_t k = 0; k < c.closed.size(); ++k)
      if (!c.closed[k]) o.fail(label + " cocycle " + std::to_string(k + 1) + " is not closed");
    if (!c.independent) o.fail(label + " cocycles are dependent modulo coboundaries");
  }
  o.notes.insert(o.notes.begin(), std::to_string(ex.h2_even.size()) + " h2 values, " +
                                      std::to_string(ex.cocycles.size()) + " cocycle lists");
  return o;
}

Outcome orbit_dimensions() {
  Outcome o;
  const ExpectedTables& ex = expected();
  for (const auto& [label, want] : ex.orbit_dim) {
    int got = orbit_dim(get(label).algebra);
    if (got != want) o.fail(label + ": computed " + std::to_string(got) + ", diagram level " + std::to_string(want));
  }
  o.notes.insert(o.notes.begin(), std::to_string(ex.orbit_dim.size()) + " diagram levels");
  return o;
}

Outcome witnesses() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t rows = 0;
  for (const auto& w : builtin_witnesses()) {
    if (w.source != "published") continue;
    ++rows;
    try {
      VerifyResult r = verify_degeneration(w);
      if (!r.verified()) o.fail(w.from + " -> " + w.to + ": " + r.message());
    } catch (const std::exception& e) {
      o.fail(w.from + " -> " + w.to + ": " + e.what());
    }
  }
  double s = seconds_since(t0);
  if (s >= 30) o.fail("took " + fmt_seconds(s));
  o.notes.insert(o.notes.begin(), std::to_string(rows) + " published rows in " + fmt_seconds(s));
  return o;
}

Outcome nondegen_tables() {
  Outcome o;
  std::set<std::tuple<std::string, std::string, std::string>> reported;
  for (const auto& d : catalog_dims()) {
    for (const auto& r : discrepancy_report(d)) {
      reported.insert({r.row.from, r.row.to, r.row.criterion});
      if (d.total() <= 4) o.fail("dimension <= 4 row reported: " + r.row.from + " -/-> " + r.row.to);
      if (!r.known) o.fail("unflagged row " + r.row.from + " -/-> " + r.row.to + " [" + r.row.criterion + "]");
    }
  }
  std::size_t certified = 0;
  for (const auto& r : nondegen_rows()) {
    if (!cited_certificates(r).empty())
      ++certified;
    else if (!reported.count({r.from, r.to, r.criterion}))
      o.fail(r.from + " -/-> " + r.to + " has neither a certificate nor a report entry");
  }
  o.notes.insert(o.notes.begin(), std::to_string(nondegen_rows().size()) + " rows, " + std::to_string(certified) +
                                      " certified, " + std::to_string(reported.size()) + " in the discrepancy report");
  return o;
}

Outcome components_check() {
  Outcome o;
  std::size_t shapes = 0;
  for (const auto& d : catalog_dims()) {
    if (d.total() > 5) continue;
    auto it = expected().components.find(d.str());
    if (it == expected().components.end()) continue;
    ++shapes;
    ComponentResult c = components(build_hasse(d));
    if (c.labels != it->second) o.fail(d.str() + ": " + std::to_string(c.labels.size()) + " components");
  }
  o.notes.insert(o.notes.begin(), std::to_string(shapes) + " shapes");
  return o;
}

Outcome gamma23_check() {
  using namespace gamma23;
  Outcome o;
  std::set<std::string> labels;
  for (const auto& r : representatives()) {
    auto l = classify_pair(r.pair);
    if (!l || *l != r.label) o.fail(r.label + " misclassified");
    if (l) labels.insert(*l);
    SuperAlgebra g = pair_to_algebra(r.pair);
    const SuperAlgebra& h = get(r.label).algebra;
    if (center(g).dim != center(h).dim || derived(g) != derived(h) || orbit_dim(g) != orbit_dim(h) ||
        h2_even(g).dim != h2_even(h).dim)
      o.fail(r.label + " fingerprint differs from the catalog");
  }
  if (labels.size() != 12) o.fail(std::to_string(labels.size()) + " distinct labels");
  std::mt19937 rng(20261017);
  std::size_t total = 0, mismatches = 0;
  for (const auto& r : representatives())
    for (int k = 0; k < 200; ++k) {
      ++total;
      auto T = testing::random_invertible(rng, 2), S = testing::random_invertible(rng, 3);
      auto l = classify_pair(pair_act(T, S, r.pair));
      if (!l || *l != r.label) ++mismatches;
    }
  if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
  o.notes.insert(o.notes.begin(), std::to_string(total) + " random classifications, " + std::to_string(mismatches) +
                                      " mismatches");
  return o;
}

Outcome rigid_families() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t h = h2_even(heisenberg_1n(n)).dim;
    if (h != 0) o.fail("heisenberg_1n(" + std::to_string(n) + "): h2 = " + std::to_string(h));
  }
  for (std::size_t m : {3, 5})
    if (!axioms(K2m(m))) o.fail("K2m(" + std::to_string(m) + ") fails the axioms");
  o.notes.insert(o.notes.begin(), "heisenberg n = 1..6, K2m m = 3, 5");
  return o;
}

FieldElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6), zero(0, 3);
  auto q = [&] { return zero(rng) == 0 ? Rational(0) : make_rational(num(rng), den(rng)); };
  return {q(), q(), q(), q()};
}

Series random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), ex(0, 6), count(1, 4);
  const long leads[] = {1, 16, -1, 81};
  Series s = Series::monomial(leads[std::abs(num(rng)) % 4], make_rational(ex(rng) - 2, 2));
  for (long k = 0, n = count(rng); k < n; ++k)
    s += Series::monomial(FieldElem(num(rng), 0, num(rng), 0), make_rational(ex(rng) + 9, 4));
  return s;
}

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

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(9001);
  std::size_t field_bad = 0, series_bad = 0, expr_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
    bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && field_parse(field_format(x)) == x;
    if (!x.is_zero()) ok = ok && x * x.inverse() == FieldElem(1);
    auto r = field_sqrt(x * x);
    ok = ok && r && *r * *r == x * x;
    field_bad += !ok;
  }
  for (int k = 0; k < 1000; ++k) {
    Series x = random_series(rng), y = random_series(rng);
    bool ok = (x * series_inv(x)).agrees_with(Series(1)) && ((x + y) * y).agrees_with(x * y + y * y) &&
              series_pow(series_pow(x, make_rational(3, 4)), 4).agrees_with(x * x * x);
    if (auto s = series_sqrt(x)) ok = ok && (*s * *s).agrees_with(x);
    series_bad += !ok;
  }
  for (int k = 0; k < 1000; ++k) {
    ExprPtr e = random_expr(rng, 4), f = random_expr(rng, 2);
    bool ok = expr_equal(*e, *expr_parse(expr_format(*e)));
    try {
      Series x = expr_eval(*e), y = expr_eval(*f);
      ok = ok && expr_eval(*Expr::binary(ExprKind::Add, e, f)).agrees_with(x + y) &&
           expr_eval(*Expr::binary(ExprKind::Mul, e, f)).agrees_with(x * y);
    } catch (const EvalError&) {
    }
    expr_bad += !ok;
  }
  if (field_bad) o.fail(std::to_string(field_bad) + " field failures");
  if (series_bad) o.fail(std::to_string(series_bad) + " series failures");
  if (expr_bad) o.fail(std::to_string(expr_bad) + " parser failures");

  std::mt19937 grng(4242);
  std::size_t complex_bad = 0;
  for (const auto& e : list_all()) {
    const SuperAlgebra& g = e.algebra;
    EvenEndomorphism psi{testing::random_matrix(grng, g.m(), g.m()), testing::random_matrix(grng, g.n(), g.n())};
    for (const auto& v : d2(g, d1(g, psi)))
      if (!v.is_zero()) {
        ++complex_bad;
        break;
      }
  }
  if (complex_bad) o.fail(std::to_string(complex_bad) + " algebras with d2 d1 != 0");

  std::size_t inv_bad = 0, inv_cases = 0;
  const auto& all = list_all();
  for (int k = 0; k < 200; ++k) {
    const SuperAlgebra& g = all[grng() % all.size()].algebra;
    SuperAlgebra h = apply_basis_change(g, block_diag(testing::random_invertible(grng, g.m()), testing::random_invertible(grng, g.n())));
    ++inv_cases;
    if (center(g).dim != center(h).dim || derived(g) != derived(h) || h2_even(g).dim != h2_even(h).dim) ++inv_bad;
  }
  if (inv_bad) o.fail(std::to_string(inv_bad) + " basis changes moved an invariant");

  std::size_t pairs = 0;
  for (const auto& d : catalog_dims()) {
    HasseDiagram h = build_hasse(d, false);
    for (const auto& [a, b] : h.closure) {
      if (a == b) continue;
      ++pairs;
      auto c = auto_nondegen(get(a).algebra, get(b).algebra);
      if (!c.empty()) o.fail(a + " -> " + b + " verified but " + c.front().describe());
    }
  }
  o.notes.insert(o.notes.begin(), "3 x 1000 scalar/series/parser cases, " + std::to_string(all.size()) +
                                      " d2 d1 checks, " + std::to_string(inv_cases) + " basis changes, " +
                                      std::to_string(pairs) + " verified pairs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"catalog integrity", catalog_integrity},
      {"cohomology regression", cohomology_regression},
      {"orbit dimensions", orbit_dimensions},
      {"degeneration witnesses", witnesses},
      {"non-degeneration tables", nondegen_tables},
      {"components", components_check},
      {"gamma23 classification", gamma23_check},
      {"rigid families", rigid_families},
      {"property suites", property_suites},
  };
  std::size_t passed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    passed += o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first;
    if (!o.notes.empty()) std::cout << ": " << o.notes.front();
    std::cout << " [" << fmt_seconds(seconds_since(t0)) << "]\n";
    for (std::size_t i = 1; i < o.notes.size(); ++i) std::cout << "       " << o.notes[i] << "\n";
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass\n";
  return passed == criteria.size() ? 0 : 1;
}

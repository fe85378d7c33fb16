#include "superlie/invariants.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace superlie {

namespace {

GradedVector basis_vector(std::size_t N, std::size_t a) {
  GradedVector v(N);
  v[a] = 1;
  return v;
}

}  // namespace

std::string format_vector(const SuperAlgebra& g, const GradedVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string cs = field_format(v[k]);
    std::string term;
    if (cs == "1") {
      term = basis_name(g, k);
    } else if (cs == "-1") {
      term = "-" + basis_name(g, k);
    } else {
      bool bare = cs.find_first_of(" +") == std::string::npos && cs.find('-', 1) == std::string::npos;
      term = (bare ? cs : "(" + cs + ")") + "*" + basis_name(g, k);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

GradedSpace center(const SuperAlgebra& g) {
  const std::size_t N = g.dim();
  GradedSpace out;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < N; ++a)
      if (g.odd(a) == (parity == 1)) idx.push_back(a);
    if (idx.empty()) continue;
    FMatrix A(N * N, idx.size());
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t j = 0; j < idx.size(); ++j) A(b * N + k, j) = g.at(idx[j], b, k);
    RrefResult r = rref(A);
    for (const auto& kv : r.kernel) {
      GradedVector v(N);
      for (std::size_t j = 0; j < idx.size(); ++j) v[idx[j]] = kv[j];
      out.basis.push_back(std::move(v));
    }
    (parity ? out.dim.odd : out.dim.even) = r.kernel.size();
  }
  return out;
}

GradedSpace derived_space(const SuperAlgebra& g) {
  const std::size_t N = g.dim();
  std::vector<FVector> vs;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) vs.push_back(g.bracket_basis(a, b));
  GradedSpace out;
  out.basis = span_basis(vs, N);
  out.dim = graded_dim(g, out.basis);
  return out;
}

GradedDim derived(const SuperAlgebra& g) { return derived_space(g).dim; }

bool gamma_is_zero(const SuperAlgebra& g) {
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      for (std::size_t k = 0; k < g.m(); ++k)
        if (!g.gamma(i, j, k).is_zero()) return false;
  return true;
}

DerivationSpace abc_derivations(const SuperAlgebra& g, const FieldElem& alpha, const FieldElem& beta,
                                const FieldElem& gamma, int degree) {
  const std::size_t N = g.dim();
  const bool odd_map = degree % 2 != 0;
  // Unknowns D(r, c) with parity(r) = parity(c) + degree.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<long> slot(N * N, -1);
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t r = 0; r < N; ++r)
      if ((g.odd(r) != g.odd(c)) == odd_map) {
        slot[r * N + c] = static_cast<long>(unknowns.size());
        unknowns.emplace_back(r, c);
      }
  DerivationSpace out;
  if (unknowns.empty()) return out;
  std::vector<FVector> rows;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      FieldElem sgn = odd_map && g.odd(a) ? gamma * FieldElem(-1) : gamma;
      for (std::size_t k = 0; k < N; ++k) {
        FVector row(unknowns.size());
        bool any = false;
        auto add = [&](std::size_t r, std::size_t c, const FieldElem& v) {
          long s = slot[r * N + c];
          if (s < 0 || v.is_zero()) return;
          row[static_cast<std::size_t>(s)] += v;
          any = true;
        };
        if (!alpha.is_zero())
          for (std::size_t l = 0; l < N; ++l)
            if (!g.at(a, b, l).is_zero()) add(k, l, alpha * g.at(a, b, l));
        if (!beta.is_zero())
          for (std::size_t r = 0; r < N; ++r)
            if (!g.at(r, b, k).is_zero()) add(r, a, -(beta * g.at(r, b, k)));
        if (!sgn.is_zero())
          for (std::size_t r = 0; r < N; ++r)
            if (!g.at(a, r, k).is_zero()) add(r, b, -(sgn * g.at(a, r, k)));
        if (any) rows.push_back(std::move(row));
      }
    }
  FMatrix A(rows.size(), unknowns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns.size(); ++c) A(r, c) = rows[r][c];
  RrefResult res = rref(A);
  if (rows.empty()) {
    res.kernel.clear();
    for (std::size_t u = 0; u < unknowns.size(); ++u) res.kernel.push_back(basis_vector(unknowns.size(), u));
  }
  out.dim = res.kernel.size();
  for (const auto& kv : res.kernel) {
    FMatrix D(N, N);
    for (std::size_t u = 0; u < unknowns.size(); ++u) D(unknowns[u].first, unknowns[u].second) = kv[u];
    out.basis.push_back(std::move(D));
  }
  return out;
}

int orbit_dim(const SuperAlgebra& g) {
  auto d = abc_derivations(g, 1, 1, 1, 0);
  return static_cast<int>(g.m() * g.m() + g.n() * g.n()) - static_cast<int>(d.dim);
}

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

using PolyVector = std::vector<MPoly>;

struct Pattern {
  std::size_t nvars = 0;
  std::vector<PolyVector> even_rows, odd_rows;
};

// Rows of the echelon matrix with the given pivots; free entries become variables.
void echelon_rows(const std::vector<std::size_t>& pivots, std::size_t width, std::size_t offset, std::size_t N,
                  std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& free_slots,
                  std::size_t& nvars) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t c = pivots[r] + 1; c < width; ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(offset + c, nvars++);
    free_slots.push_back(std::move(slots));
  }
  (void)N;
}

PolyVector make_row(std::size_t N, std::size_t nvars, std::size_t pivot,
                    const std::vector<std::pair<std::size_t, std::size_t>>& slots) {
  PolyVector v(N, MPoly(nvars));
  v[pivot] = MPoly::constant(nvars, 1);
  for (const auto& [coord, var] : slots) v[coord] = MPoly::var(nvars, var);
  return v;
}

PolyVector poly_bracket(const SuperAlgebra& g, const PolyVector& x, const PolyVector& y, std::size_t nvars) {
  const std::size_t N = g.dim();
  PolyVector out(N, MPoly(nvars));
  for (std::size_t a = 0; a < N; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < N; ++b) {
      if (y[b].is_zero()) continue;
      MPoly prod;
      bool have = false;
      for (std::size_t k = 0; k < N; ++k) {
        if (g.at(a, b, k).is_zero()) continue;
        if (!have) {
          prod = x[a] * y[b];
          have = true;
        }
        out[k] = out[k] + prod.scaled(g.at(a, b, k), Monomial(nvars, 0));
      }
    }
  }
  return out;
}

struct PatternSystem {
  PolySystem sys;
  std::vector<std::vector<std::size_t>> pivots;  // even pivots, odd pivots
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> slots;
  std::size_t nvars = 0;
};

PatternSystem build_system(const SuperAlgebra& g, const std::vector<std::size_t>& ep,
                           const std::vector<std::size_t>& op) {
  const std::size_t m = g.m(), n = g.n(), N = g.dim();
  PatternSystem ps;
  echelon_rows(ep, m, 0, N, ps.slots, ps.nvars);
  echelon_rows(op, n, m, N, ps.slots, ps.nvars);
  std::vector<PolyVector> rows;
  for (std::size_t r = 0; r < ep.size(); ++r) rows.push_back(make_row(N, ps.nvars, ep[r], ps.slots[r]));
  for (std::size_t r = 0; r < op.size(); ++r)
    rows.push_back(make_row(N, ps.nvars, m + op[r], ps.slots[ep.size() + r]));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (i == j && i < ep.size()) continue;
      for (auto& p : poly_bracket(g, rows[i], rows[j], ps.nvars))
        if (!p.is_zero()) ps.sys.polynomials.push_back(std::move(p));
    }
  for (std::size_t v = 0; v < ps.nvars; ++v) ps.sys.variables.push_back("x" + std::to_string(v + 1));
  ps.pivots = {ep, op};
  return ps;
}

// Tries to pin every variable to a small field value while the system stays consistent.
std::optional<std::vector<FieldElem>> find_point(PolySystem sys, std::size_t nvars, const GroebnerCaps& caps) {
  static const std::vector<FieldElem> candidates = {
      0, 1, -1, FieldElem::i(), -FieldElem::i(), 2, -2, FieldElem(1) / FieldElem(2), FieldElem::sqrt2()};
  std::vector<FieldElem> point(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    bool fixed = false;
    for (const auto& c : candidates) {
      PolySystem trial = sys;
      trial.polynomials.push_back(MPoly::var(nvars, v) - MPoly::constant(nvars, c));
      if (ideal_triviality(trial, caps) == Triviality::NonEmpty) {
        sys = std::move(trial);
        point[v] = c;
        fixed = true;
        break;
      }
    }
    if (!fixed) return std::nullopt;
  }
  return point;
}

}  // namespace

TrivialSubResult trivial_sub_max(const SuperAlgebra& g, const GroebnerCaps& caps) {
  const std::size_t m = g.m(), n = g.n(), N = g.dim();
  TrivialSubResult out;
  std::vector<std::vector<std::vector<std::size_t>>> even_pats(m + 1), odd_pats(n + 1);
  for (std::size_t a = 0; a <= m; ++a) combinations(m, a, even_pats[a]);
  for (std::size_t b = 0; b <= n; ++b) combinations(n, b, odd_pats[b]);

  std::optional<PatternSystem> best;
  std::size_t best_total = 0;

  for (std::size_t a = 0; a <= m; ++a) {
    // Largest odd dimension first; smaller shapes of an achieved shape are achieved too.
    for (std::size_t b = n + 1; b-- > 0;) {
      Shape s{a, b};
      bool dominated = false;
      for (const auto& p : out.profile)
        if (p.first >= a && p.second >= b) dominated = true;
      if (dominated) {
        out.profile.insert(s);
        continue;
      }
      bool any_unknown = false, found = false;
      for (const auto& ep : even_pats[a]) {
        for (const auto& op : odd_pats[b]) {
          PatternSystem ps = build_system(g, ep, op);
          Triviality t = ideal_triviality(ps.sys, caps);
          if (t == Triviality::NonEmpty) {
            found = true;
            if (a + b > best_total || !best) {
              best_total = a + b;
              best = std::move(ps);
            }
            break;
          }
          if (t == Triviality::Unknown) any_unknown = true;
        }
        if (found) break;
      }
      if (found) {
        out.profile.insert(s);
      } else if (any_unknown) {
        out.undecided.insert(s);
      } else {
        out.excluded.insert(s);
      }
    }
  }
  // Close the profile downward.
  std::set<Shape> closed;
  for (const auto& p : out.profile)
    for (std::size_t a = 0; a <= p.first; ++a)
      for (std::size_t b = 0; b <= p.second; ++b) closed.insert({a, b});
  out.profile = closed;
  for (const auto& p : closed) {
    out.excluded.erase(p);
    out.undecided.erase(p);
  }
  for (const auto& p : out.profile) out.lower = std::max(out.lower, p.first + p.second);
  bool unknown_above = false;
  for (const auto& p : out.undecided)
    if (p.first + p.second > out.lower) unknown_above = true;
  if (!unknown_above) out.exact = out.lower;

  if (best) {
    const PatternSystem& ps = *best;
    auto point = find_point(ps.sys, ps.nvars, caps);
    std::vector<std::string> vecs;
    std::size_t row = 0;
    for (int part = 0; part < 2; ++part)
      for (std::size_t r = 0; r < ps.pivots[part].size(); ++r, ++row) {
        std::size_t pivot = (part ? m : 0) + ps.pivots[part][r];
        if (point) {
          GradedVector v(N);
          v[pivot] = 1;
          for (const auto& [coord, var] : ps.slots[row]) v[coord] = (*point)[var];
          vecs.push_back(format_vector(g, v));
        } else {
          std::string text = basis_name(g, pivot);
          for (const auto& [coord, var] : ps.slots[row])
            text += " + " + ps.sys.variables[var] + "*" + basis_name(g, coord);
          vecs.push_back(text);
        }
      }
    std::string w = "span{";
    for (std::size_t k = 0; k < vecs.size(); ++k) w += (k ? ", " : "") + vecs[k];
    w += "}";
    if (!point) w += " (for some root of the bracket equations)";
    out.witness = w;
  } else {
    out.witness = "span{}";
  }
  return out;
}

std::vector<std::array<FieldElem, 3>> default_abc_tuples() {
  return {{FieldElem(1), FieldElem(1), FieldElem(1)},
          {FieldElem(0), FieldElem(1), FieldElem(0)},
          {FieldElem(0), FieldElem(1), FieldElem(-1)}};
}

InvariantReport invariant_report(const SuperAlgebra& g, bool with_trivial, const GroebnerCaps& caps) {
  InvariantReport r;
  r.center = center(g).dim;
  r.derived = derived(g);
  r.gamma_zero = gamma_is_zero(g);
  r.der0_dim = abc_derivations(g, 1, 1, 1, 0).dim;
  r.orbit_dim = static_cast<int>(g.m() * g.m() + g.n() * g.n()) - static_cast<int>(r.der0_dim);
  for (const auto& t : default_abc_tuples())
    for (int deg = 0; deg < 2; ++deg)
      r.abc_entries.push_back({t[0], t[1], t[2], deg, abc_derivations(g, t[0], t[1], t[2], deg).dim});
  if (with_trivial) r.trivial = trivial_sub_max(g, caps);
  r.lower_central = lower_central_series(g);
  return r;
}

std::string report_json(const InvariantReport& r, const std::string& label) {
  using nlohmann::ordered_json;
  auto gd = [](const GradedDim& d) { return ordered_json::array({d.even, d.odd}); };
  ordered_json j;
  j["label"] = label;
  j["center"] = gd(r.center);
  j["derived"] = gd(r.derived);
  j["gamma_zero"] = r.gamma_zero;
  j["der0_dim"] = r.der0_dim;
  j["orbit_dim"] = r.orbit_dim;
  ordered_json abc = ordered_json::array();
  for (const auto& e : r.abc_entries)
    abc.push_back({{"alpha", field_format(e.alpha)},
                   {"beta", field_format(e.beta)},
                   {"gamma", field_format(e.gamma)},
                   {"degree", e.degree},
                   {"dim", e.dim}});
  j["abc_entries"] = abc;
  ordered_json t;
  t["lower"] = r.trivial.lower;
  t["witness"] = r.trivial.witness;
  t["exact"] = r.trivial.exact ? ordered_json(*r.trivial.exact) : ordered_json("Unknown");
  ordered_json prof = ordered_json::array();
  for (const auto& s : r.trivial.profile) prof.push_back({s.first, s.second});
  t["graded_profile"] = prof;
  j["trivial_max"] = t;
  ordered_json lcs = ordered_json::array();
  for (const auto& d : r.lower_central) lcs.push_back(gd(d));
  j["lower_central_series"] = lcs;
  return j.dump(2);
}

}  // namespace superlie

#include "superlie/orbitrel.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "superlie/expr.hpp"

namespace superlie {

namespace {

std::string pair_name(std::size_t m, std::size_t a, std::size_t b) {
  return "[" + basis_name(m, a) + "," + basis_name(m, b) + "]";
}

VerifyResult verify_texts(const std::vector<std::string>& texts, const SuperAlgebra& g, const SuperAlgebra& h,
                          const Rational& precision) {
  const std::size_t m = g.m(), n = g.n(), N = g.dim();
  VerifyResult out;
  out.precision = precision;
  SMatrix M(N, N);
  for (std::size_t j = 0; j < N; ++j) {
    auto v = expr_eval_vector(*expr_parse(texts[j], {true}), m, n, precision);
    for (std::size_t k = 0; k < N; ++k) {
      if ((k >= m) != (j >= m)) {
        if (!v[k].is_zero_to_precision()) {
          out.status = VerifyStatus::NotGraded;
          out.pair = j < m ? "x" + std::to_string(j + 1) : "y" + std::to_string(j - m + 1);
          out.got = texts[j];
          return out;
        }
        v[k] = Series();
      }
      M(k, j) = v[k];
    }
  }
  SeriesAlgebra s;
  try {
    s = apply_basis_change(g, M, precision);
  } catch (const Singular&) {
    out.status = VerifyStatus::Singular;
    return out;
  }
  bool undetermined = false;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      GradedVector limit(N), target(N);
      for (std::size_t k = 0; k < N; ++k) {
        const Series& c = s.at(a, b, k);
        for (const auto& [e, coeff] : c.terms())
          if (e < 0 && !coeff.is_zero()) {
            out.status = VerifyStatus::Diverges;
            out.pair = pair_name(m, a, b);
            out.got = "(" + c.str() + ")*" + basis_name(m, k);
            return out;
          }
        if (c.precision() && *c.precision() <= 0) undetermined = true;
        limit[k] = c.coeff(0);
        target[k] = h.at(a, b, k);
      }
      if (undetermined) continue;
      if (limit != target) {
        out.status = VerifyStatus::WrongLimit;
        out.pair = pair_name(m, a, b);
        out.got = format_vector(h, limit);
        out.expected = format_vector(h, target);
        return out;
      }
    }
  if (undetermined) throw InsufficientPrecision();
  return out;
}

// Mixed-radix enumeration of let alternatives.
bool next_choice(std::vector<std::size_t>& idx, const std::vector<std::pair<std::string, std::vector<std::string>>>& let) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (++idx[k] < let[k].second.size()) return true;
    idx[k] = 0;
  }
  return false;
}

// Cached per-algebra data for certificate generation.
struct Facts {
  GradedDim center, derived;
  bool gamma_zero = false;
  int orbit = 0;
  std::optional<TrivialSubResult> trivial;
  std::map<std::string, std::size_t> abc;
  std::mutex mu;
};

std::string algebra_key(const SuperAlgebra& g) {
  return std::to_string(g.m()) + "|" + std::to_string(g.n()) + ":" + describe(g);
}

Facts& facts(const SuperAlgebra& g) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Facts>> cache;
  std::string key = algebra_key(g);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto f = std::make_unique<Facts>();
  f->center = center(g).dim;
  f->derived = derived(g);
  f->gamma_zero = gamma_is_zero(g);
  f->orbit = orbit_dim(g);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(f));
  return *it->second;
}

const TrivialSubResult& trivial_of(const SuperAlgebra& g) {
  Facts& f = facts(g);
  std::lock_guard<std::mutex> lock(f.mu);
  if (!f.trivial) f.trivial = trivial_sub_max(g);
  return *f.trivial;
}

std::size_t abc_of(const SuperAlgebra& g, const std::array<FieldElem, 3>& t, int degree) {
  Facts& f = facts(g);
  std::string key = field_format(t[0]) + "," + field_format(t[1]) + "," + field_format(t[2]) + ";" +
                    std::to_string(degree);
  {
    std::lock_guard<std::mutex> lock(f.mu);
    if (auto it = f.abc.find(key); it != f.abc.end()) return it->second;
  }
  std::size_t d = abc_derivations(g, t[0], t[1], t[2], degree).dim;
  std::lock_guard<std::mutex> lock(f.mu);
  f.abc[key] = d;
  return d;
}

std::string shape_text(const Shape& s) { return "(" + std::to_string(s.first) + "|" + std::to_string(s.second) + ")"; }

std::string tuple_text(const std::array<FieldElem, 3>& t) {
  return "(" + field_format(t[0]) + "," + field_format(t[1]) + "," + field_format(t[2]) + ")";
}

std::size_t part(const GradedDim& d, int parity) { return parity ? d.odd : d.even; }

std::atomic<std::size_t> worker_count{0};

std::size_t workers(std::size_t jobs) {
  std::size_t n = worker_count.load();
  if (n == 0) n = std::thread::hardware_concurrency();
  return std::max<std::size_t>(1, std::min(jobs, n));
}

}  // namespace

void set_worker_count(std::size_t n) { worker_count = n; }

std::string VerifyResult::message() const {
  switch (status) {
    case VerifyStatus::Verified:
      return "Verified";
    case VerifyStatus::Singular:
      return "Failed: singular basis";
    case VerifyStatus::Diverges:
      return "Failed: diverges at " + pair + " (" + got + ")";
    case VerifyStatus::WrongLimit:
      return "Failed: wrong limit at " + pair + ": got " + got + ", expected " + expected;
    case VerifyStatus::NotGraded:
      return "Failed: " + pair + " = " + got + " mixes parities";
  }
  return {};
}

std::string substitute_let(const std::string& text, const std::string& name, const std::string& value) {
  auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, name.size(), name) == 0 && (i == 0 || !ident(text[i - 1])) &&
        (i + name.size() >= text.size() || !ident(text[i + name.size()]))) {
      out += "(" + value + ")";
      i += name.size();
    } else {
      out += text[i++];
    }
  }
  return out;
}

VerifyResult verify_degeneration(const WitnessSpec& w, const SuperAlgebra& from, const SuperAlgebra& to,
                                 const Rational& precision) {
  if (from.m() != to.m() || from.n() != to.n() || w.basis.size() != from.dim())
    throw DimensionMismatch("witness shape does not match " + w.from + " -> " + w.to);
  std::vector<std::size_t> idx(w.let.size(), 0);
  std::optional<VerifyResult> first;
  bool insufficient = false;
  do {
    std::vector<std::string> texts;
    std::vector<std::string> choice;
    for (std::size_t k = 0; k < idx.size(); ++k) choice.push_back(w.let[k].second[idx[k]]);
    for (const auto& [key, text] : w.basis) {
      std::string t = text;
      for (std::size_t k = 0; k < idx.size(); ++k) t = substitute_let(t, w.let[k].first, choice[k]);
      texts.push_back(t);
    }
    try {
      VerifyResult r = verify_texts(texts, from, to, precision);
      r.let_choice = choice;
      if (r.verified()) return r;
      if (!first) first = r;
    } catch (const InsufficientPrecision&) {
      insufficient = true;
    }
  } while (next_choice(idx, w.let));
  if (insufficient) throw InsufficientPrecision();
  return *first;
}

VerifyResult verify_degeneration(const WitnessSpec& w, const Rational& precision) {
  return verify_degeneration(w, get(w.from).algebra, get(w.to).algebra, precision);
}

VerifyResult verify_with_retry(const WitnessSpec& w, const Rational& precision, int rounds) {
  Rational p = precision;
  for (int k = 0;; ++k) {
    try {
      return verify_degeneration(w, p);
    } catch (const InsufficientPrecision&) {
      if (k >= rounds) throw;
      p *= 2;
    } catch (const EvalError& e) {
      if (e.kind() != EvalFailure::InsufficientPrecision || k >= rounds) throw;
      p *= 2;
    }
  }
}

std::string NonDegCertificate::describe() const {
  std::string s = criterion;
  if (abc) s += " " + tuple_text(*abc);
  if (parity) s += *parity ? " odd" : " even";
  if (g_value.empty() && h_value.empty()) return s + (detail.empty() ? "" : ": " + detail);
  s += ": " + g_value + " vs " + h_value;
  if (!detail.empty()) s += " (" + detail + ")";
  return s;
}

std::vector<NonDegCertificate> auto_nondegen(const SuperAlgebra& g, const SuperAlgebra& h, const NonDegOptions& opts) {
  if (g.m() != h.m() || g.n() != h.n()) throw DimensionMismatch("auto_nondegen needs equal graded shapes");
  std::vector<NonDegCertificate> out;
  if (g == h) return out;
  Facts& fg = facts(g);
  Facts& fh = facts(h);
  if (opts.strict_orbit ? fg.orbit <= fh.orbit : fg.orbit < fh.orbit)
    out.push_back({"orbit_dim", {}, {}, std::to_string(fg.orbit), std::to_string(fh.orbit),
                   opts.strict_orbit ? "needs dim O(g) > dim O(h)" : "needs dim O(g) >= dim O(h)"});
  if (fg.gamma_zero && !fh.gamma_zero)
    out.push_back({"gamma_zero", {}, {}, "Gamma = 0", "Gamma != 0", ""});
  for (int i : {0, 1}) {
    if (part(fg.center, i) > part(fh.center, i))
      out.push_back({"center", i, {}, std::to_string(part(fg.center, i)), std::to_string(part(fh.center, i)),
                     "needs dim z(g) <= dim z(h)"});
  }
  for (int i : {0, 1}) {
    if (part(fg.derived, i) < part(fh.derived, i))
      out.push_back({"derived", i, {}, std::to_string(part(fg.derived, i)), std::to_string(part(fh.derived, i)),
                     "needs dim [g,g] >= dim [h,h]"});
  }
  for (const auto& t : opts.abc_tuples)
    for (int i : {0, 1}) {
      std::size_t dg = abc_of(g, t, i), dh = abc_of(h, t, i);
      if (dg > dh) out.push_back({"abc_derivation", i, t, std::to_string(dg), std::to_string(dh), ""});
    }
  const TrivialSubResult& tg = trivial_of(g);
  const TrivialSubResult& th = trivial_of(h);
  if (tg.exact && th.exact && *tg.exact > *th.exact)
    out.push_back({"trivial_sub", {}, {}, std::to_string(*tg.exact), std::to_string(*th.exact), "needs t(g) <= t(h)"});
  if (opts.graded_trivial)
    for (const auto& s : tg.profile)
      if (th.excluded.count(s)) {
        out.push_back({"trivial_sub", {}, {}, "shape " + shape_text(s) + " present", "shape " + shape_text(s) + " absent",
                       "graded trivial subspaces"});
        break;
      }
  if (opts.depth > 0) {
    NonDegOptions sub = opts;
    sub.depth = opts.depth - 1;
    sub.strict_orbit = false;
    auto nested = [&](const SuperAlgebra& a, const SuperAlgebra& b, const std::string& name) {
      auto certs = auto_nondegen(a, b, sub);
      if (!certs.empty()) out.push_back({name, {}, {}, "", "", certs.front().describe()});
    };
    nested(ab(g), ab(h), "ab_recursion");
    nested(F(g), F(h), "F_recursion");
  }
  return out;
}

std::string certificate_criterion(const std::string& c) {
  static const std::map<std::string, std::string> names = {
      {"gamma", "gamma_zero"},     {"center", "center"}, {"derived", "derived"},     {"ab", "ab_recursion"},
      {"F", "F_recursion"},        {"abc", "abc_derivation"}, {"trivial", "trivial_sub"}, {"orbit_dim", "orbit_dim"}};
  auto it = names.find(c);
  if (it == names.end()) throw std::invalid_argument("unknown criterion " + c);
  return it->second;
}

std::vector<NonDegCertificate> cited_certificates(const NonDegRow& row) {
  std::string want = certificate_criterion(row.criterion);
  NonDegOptions opts;
  std::optional<std::array<FieldElem, 3>> tuple;
  if (row.abc.size() == 3) {
    tuple = std::array<FieldElem, 3>{row.abc[0], row.abc[1], row.abc[2]};
    opts.abc_tuples = {*tuple};
  }
  std::vector<NonDegCertificate> out;
  for (auto& c : auto_nondegen(get(row.from).algebra, get(row.to).algebra, opts)) {
    if (c.criterion != want) continue;
    if (row.parity && c.parity && *c.parity != *row.parity) continue;
    out.push_back(c);
  }
  return out;
}

HasseDiagram build_hasse(const GradedDim& d, bool check) {
  HasseDiagram hd;
  hd.dim = d;
  for (const auto* e : list(d)) {
    hd.nodes.push_back(e->label);
    hd.orbit_dim[e->label] = orbit_dim(e->algebra);
  }
  std::vector<const WitnessSpec*> ws;
  for (const auto& w : builtin_witnesses())
    if (label_dims(w.from) == d) ws.push_back(&w);
  std::vector<std::string> messages(ws.size());
  std::vector<char> ok(ws.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < ws.size();) {
      try {
        VerifyResult r = verify_with_retry(*ws[k]);
        ok[k] = r.verified();
        messages[k] = r.message();
      } catch (const std::exception& e) {
        messages[k] = std::string("Failed: ") + e.what();
      }
    }
  };
  std::size_t threads = workers(ws.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < hd.nodes.size(); ++k) index[hd.nodes[k]] = k;
  const std::size_t N = hd.nodes.size();
  std::vector<std::vector<char>> reach(N, std::vector<char>(N, 0));
  for (std::size_t k = 0; k < N; ++k) reach[k][k] = 1;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (!ok[k]) {
      hd.failures.push_back({ws[k]->from + " -> " + ws[k]->to, messages[k]});
      continue;
    }
    hd.verified.push_back({ws[k]->from, ws[k]->to, ws[k]->source});
    reach[index.at(ws[k]->from)][index.at(ws[k]->to)] = 1;
    if (check && hd.orbit_dim[ws[k]->from] <= hd.orbit_dim[ws[k]->to])
      throw ConsistencyViolation("orbit dimension does not drop along " + ws[k]->from + " -> " + ws[k]->to);
  }
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < N; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < N; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (!reach[i][j]) continue;
      hd.closure.insert({hd.nodes[i], hd.nodes[j]});
      if (i == j) continue;
      if (reach[j][i]) throw ConsistencyViolation("cycle between " + hd.nodes[i] + " and " + hd.nodes[j]);
      bool direct = true;
      for (std::size_t k = 0; k < N && direct; ++k)
        if (k != i && k != j && reach[i][k] && reach[k][j]) direct = false;
      if (direct) hd.edges.push_back({hd.nodes[i], hd.nodes[j]});
    }
  if (check) {
    for (const auto& [a, b] : hd.closure) {
      if (a == b) continue;
      auto certs = auto_nondegen(get(a).algebra, get(b).algebra);
      if (!certs.empty())
        throw ConsistencyViolation(a + " -> " + b + " is verified but " + certs.front().describe());
    }
  }
  return hd;
}

std::string hasse_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph \"N" << h.dim.str() << "\" {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<std::string>, std::greater<>> levels;
  for (const auto& n : h.nodes) levels[h.orbit_dim.at(n)].push_back(n);
  for (auto& [dim, labels] : levels) {
    std::sort(labels.begin(), labels.end(), label_less);
    out << "  { rank=same; \"dim " << dim << "\" [shape=none];";
    for (const auto& l : labels) out << " \"" << l << "\";";
    out << " }\n";
  }
  std::vector<int> dims;
  for (const auto& [dim, labels] : levels) dims.push_back(dim);
  for (std::size_t k = 0; k + 1 < dims.size(); ++k)
    out << "  \"dim " << dims[k] << "\" -> \"dim " << dims[k + 1] << "\" [style=invis];\n";
  auto edges = h.edges;
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return label_less(x.first, y.first);
    return label_less(x.second, y.second);
  });
  for (const auto& [a, b] : edges) out << "  \"" << a << "\" -> \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

ComponentResult components(const HasseDiagram& h) {
  ComponentResult out;
  for (const auto& n : h.nodes) {
    bool maximal = true;
    for (const auto& o : h.nodes)
      if (o != n && h.reaches(o, n)) maximal = false;
    if (maximal) out.labels.push_back(n);
  }
  for (std::size_t i = 0; i < out.labels.size(); ++i)
    for (std::size_t j = 0; j < out.labels.size(); ++j) {
      if (i == j) continue;
      const auto& a = out.labels[i];
      const auto& b = out.labels[j];
      if (auto_nondegen(get(a).algebra, get(b).algebra).empty())
        out.warnings.push_back("no certificate separates " + a + " -/-> " + b);
    }
  return out;
}

std::string DiscrepancyRow::status() const {
  if (refuted) return "refuted";
  if (!alternatives.empty()) return "alternative";
  return "unconfirmed";
}

std::vector<DiscrepancyRow> discrepancy_report(const std::optional<GradedDim>& d) {
  std::vector<const NonDegRow*> rows;
  for (const auto& r : nondegen_rows())
    if (!d || label_dims(r.from) == *d) rows.push_back(&r);
  std::vector<char> flagged(rows.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < rows.size();) flagged[k] = cited_certificates(*rows[k]).empty();
  };
  std::size_t threads = workers(rows.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::map<std::string, HasseDiagram> hasse;
  std::vector<DiscrepancyRow> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (!flagged[k]) continue;
    const NonDegRow& r = *rows[k];
    DiscrepancyRow row{r, auto_nondegen(get(r.from).algebra, get(r.to).algebra), false, std::nullopt};
    std::string shape = label_dims(r.from).str();
    if (!hasse.count(shape)) hasse.emplace(shape, build_hasse(label_dims(r.from), false));
    row.refuted = hasse.at(shape).reaches(r.from, r.to);
    for (const auto& kd : expected().known_discrepancies)
      if (kd.from == r.from && kd.to == r.to && kd.criterion == r.criterion) row.known = kd;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace superlie

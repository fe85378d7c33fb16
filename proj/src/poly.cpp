#include "superlie/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace superlie {

UPoly::UPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::eval(const FieldElem& x) const {
  FieldElem acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<FieldElem> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * FieldElem(static_cast<long>(k)));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  FieldElem inv = lead().inverse();
  std::vector<FieldElem> d = c_;
  for (auto& v : d) v *= inv;
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& x, const UPoly& y) {
  std::vector<FieldElem> d(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = x.coeff(k) + y.coeff(k);
  return UPoly(std::move(d));
}

UPoly operator-(const UPoly& x, const UPoly& y) {
  std::vector<FieldElem> d(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = x.coeff(k) - y.coeff(k);
  return UPoly(std::move(d));
}

UPoly operator*(const UPoly& x, const UPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<FieldElem> d(x.c_.size() + y.c_.size() - 1);
  for (std::size_t a = 0; a < x.c_.size(); ++a)
    for (std::size_t b = 0; b < y.c_.size(); ++b) d[a + b] += x.c_[a] * y.c_[b];
  return UPoly(std::move(d));
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << field_format(c_[k]) << ")";
    if (k > 0) out << "*x^" << k;
  }
  return out.str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<FieldElem> rem = a.coeffs();
  std::vector<FieldElem> quo;
  int db = b.degree();
  FieldElem inv = b.lead().inverse();
  if (a.degree() >= db) quo.resize(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    FieldElem f = rem[k] * inv;
    if (f.is_zero()) continue;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  UPoly q, r;
  divmod(p, g, q, r);
  return q.monic();
}

bool is_squarefree(const UPoly& p) { return gcd(p, p.derivative()).degree() <= 0; }

std::vector<FieldElem> roots_upto_quadratic(const UPoly& p) {
  if (p.degree() == 1) return {-p.coeff(0) / p.coeff(1)};
  if (p.degree() != 2) return {};
  const FieldElem& a = p.coeff(2);
  const FieldElem& b = p.coeff(1);
  const FieldElem& c = p.coeff(0);
  auto s = field_sqrt(b * b - FieldElem(4) * a * c);
  if (!s) return {};
  FieldElem den = (FieldElem(2) * a).inverse();
  return {(-b + *s) * den, (-b - *s) * den};
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  int dx = 0, dy = 0;
  for (auto v : x) dx += v;
  for (auto v : y) dy += v;
  if (dx != dy) return dx > dy;
  return x > y;
}

MPoly MPoly::constant(std::size_t nvars, const FieldElem& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::var(std::size_t nvars, std::size_t k) {
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m[k] = 1;
  p.add_term(m, 1);
  return p;
}

bool MPoly::is_nonzero_constant() const {
  if (terms_.size() != 1) return false;
  for (auto v : terms_.begin()->first)
    if (v) return false;
  return true;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto v : m) s += v;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::add_term(const Monomial& mono, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::scaled(const FieldElem& c, const Monomial& shift) const {
  MPoly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) {
    Monomial s = m;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<std::uint8_t>(s[k] + shift[k]);
    out.terms_.emplace_hint(out.terms_.end(), std::move(s), v * c);
  }
  return out;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& point) const {
  FieldElem acc;
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (std::size_t k = 0; k < m.size(); ++k)
      for (int e = 0; e < m[k]; ++e) t *= point[k];
    acc += t;
  }
  return acc;
}

MPoly operator+(const MPoly& x, const MPoly& y) {
  MPoly out = x;
  out.nvars_ = std::max(x.nvars_, y.nvars_);
  for (const auto& [m, c] : y.terms_) out.add_term(m, c);
  return out;
}

MPoly operator-(const MPoly& x, const MPoly& y) {
  MPoly out = x;
  out.nvars_ = std::max(x.nvars_, y.nvars_);
  for (const auto& [m, c] : y.terms_) out.add_term(m, -c);
  return out;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
  MPoly out(std::max(x.nvars_, y.nvars_));
  for (const auto& [my, cy] : y.terms_) {
    MPoly part = x.scaled(cy, my);
    for (const auto& [m, c] : part.terms_) out.add_term(m, c);
  }
  return out;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = std::max(a[k], b[k]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) m[k] = static_cast<std::uint8_t>(a[k] - b[k]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

int degree_of(const Monomial& m) {
  int d = 0;
  for (auto v : m) d += v;
  return d;
}

MPoly make_monic(const MPoly& p) { return p.scaled(p.lead_coeff().inverse(), Monomial(p.nvars(), 0)); }

// Full reduction of p modulo basis g.
MPoly normal_form(MPoly p, const std::vector<MPoly>& g) {
  MPoly r(p.nvars());
  while (!p.is_zero()) {
    const Monomial lm = p.lead_monomial();
    const FieldElem lc = p.lead_coeff();
    bool reduced = false;
    for (const auto& q : g) {
      if (divides(q.lead_monomial(), lm)) {
        p = p - q.scaled(lc / q.lead_coeff(), quotient(lm, q.lead_monomial()));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(lm, lc);
      MPoly head(p.nvars());
      head.add_term(lm, lc);
      p = p - head;
    }
  }
  return r;
}

}  // namespace

Triviality ideal_triviality(const PolySystem& ps, const GroebnerCaps& caps) {
  std::vector<MPoly> g;
  for (const auto& p : ps.polynomials) {
    if (p.is_zero()) continue;
    if (p.is_nonzero_constant()) return Triviality::Empty;
    g.push_back(make_monic(p));
  }
  if (g.empty()) return Triviality::NonEmpty;
  // Inter-reduce the input.
  for (std::size_t k = 0; k < g.size();) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != k) others.push_back(g[j]);
    MPoly r = normal_form(g[k], others);
    if (r.is_zero()) {
      g.erase(g.begin() + static_cast<long>(k));
      k = 0;
      continue;
    }
    if (r.is_nonzero_constant()) return Triviality::Empty;
    r = make_monic(r);
    bool changed = r.lead_monomial() != g[k].lead_monomial();
    g[k] = r;
    k = changed ? 0 : k + 1;
  }
  if (g.empty()) return Triviality::NonEmpty;

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending, done;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  while (!pending.empty()) {
    auto pick = pending.begin();
    int best = 1 << 30;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      int d = degree_of(lcm(g[it->first].lead_monomial(), g[it->second].lead_monomial()));
      if (d < best) {
        best = d;
        pick = it;
      }
    }
    auto [i, j] = *pick;
    pending.erase(pick);
    done.insert({i, j});
    const Monomial& li = g[i].lead_monomial();
    const Monomial& lj = g[j].lead_monomial();
    if (coprime(li, lj)) continue;
    Monomial l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].lead_monomial(), l)) continue;
      Pair ik{std::min(i, k), std::max(i, k)}, jk{std::min(j, k), std::max(j, k)};
      chain = done.count(ik) && done.count(jk);
    }
    if (chain) continue;
    MPoly s = g[i].scaled(1, quotient(l, li)) - g[j].scaled(1, quotient(l, lj));
    MPoly r = normal_form(s, g);
    if (r.is_zero()) continue;
    if (r.is_nonzero_constant()) return Triviality::Empty;
    if (r.total_degree() > caps.max_degree || g.size() + 1 > caps.max_basis) return Triviality::Unknown;
    g.push_back(make_monic(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
  }
  return Triviality::NonEmpty;
}

}  // namespace superlie

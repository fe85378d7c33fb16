#include "superlie/cohomology.hpp"

#include <regex>

#include "superlie/expr.hpp"

namespace superlie {

namespace {

enum class SlotKind { EE, EF, FF };

struct Slot {
  SlotKind kind;
  std::size_t i, j, k;
};

std::vector<Slot> slots(std::size_t m, std::size_t n) {
  std::vector<Slot> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) out.push_back({SlotKind::EE, i, j, k});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.push_back({SlotKind::EF, i, j, k});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) out.push_back({SlotKind::FF, i, j, k});
  return out;
}

// Full tensor T[(a*N + b)*N + k] = phi(b_a, b_b)_k.
using Tensor = std::vector<FieldElem>;

Tensor to_tensor(const Cochain2Even& phi) {
  const std::size_t m = phi.m, n = phi.n, N = m + n;
  Tensor t(N * N * N);
  auto at = [&](std::size_t a, std::size_t b, std::size_t k) -> FieldElem& { return t[(a * N + b) * N + k]; };
  auto sl = slots(m, n);
  for (std::size_t s = 0; s < sl.size(); ++s) {
    const FieldElem& v = phi.coords[s];
    if (v.is_zero()) continue;
    const Slot& x = sl[s];
    switch (x.kind) {
      case SlotKind::EE:
        at(x.i, x.j, x.k) += v;
        at(x.j, x.i, x.k) -= v;
        break;
      case SlotKind::EF:
        at(x.i, m + x.j, m + x.k) += v;
        at(m + x.j, x.i, m + x.k) -= v;
        break;
      case SlotKind::FF:
        at(m + x.i, m + x.j, x.k) += v;
        if (x.i != x.j) at(m + x.j, m + x.i, x.k) += v;
        break;
    }
  }
  return t;
}

Cochain2Even from_tensor(std::size_t m, std::size_t n, const Tensor& t) {
  const std::size_t N = m + n;
  auto at = [&](std::size_t a, std::size_t b, std::size_t k) { return t[(a * N + b) * N + k]; };
  Cochain2Even phi{m, n, {}};
  for (const auto& x : slots(m, n)) {
    switch (x.kind) {
      case SlotKind::EE:
        phi.coords.push_back(at(x.i, x.j, x.k));
        break;
      case SlotKind::EF:
        phi.coords.push_back(at(x.i, m + x.j, m + x.k));
        break;
      case SlotKind::FF:
        phi.coords.push_back(at(m + x.i, m + x.j, x.k));
        break;
    }
  }
  return phi;
}

Cochain2Even unit_cochain(std::size_t m, std::size_t n, std::size_t s) {
  Cochain2Even phi{m, n, FVector(cochain_dim(m, n))};
  phi.coords[s] = 1;
  return phi;
}

FMatrix rows_matrix(const std::vector<FVector>& rows, std::size_t width) {
  FMatrix A(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) A(r, c) = rows[r][c];
  return A;
}

std::vector<FVector> coboundary_vectors(const SuperAlgebra& g) {
  const std::size_t m = g.m(), n = g.n();
  std::vector<FVector> out;
  for (std::size_t r = 0; r < m + n; ++r)
    for (std::size_t c = 0; c < m + n; ++c) {
      if (g.odd(r) != g.odd(c)) continue;
      EvenEndomorphism psi{FMatrix(m, m), FMatrix(n, n)};
      if (r < m) {
        psi.A(r, c) = 1;
      } else {
        psi.D(r - m, c - m) = 1;
      }
      out.push_back(d1(g, psi).coords);
    }
  return out;
}

FMatrix d2_matrix(const SuperAlgebra& g) {
  const std::size_t dim = cochain_dim(g.m(), g.n());
  std::vector<FVector> cols;
  for (std::size_t s = 0; s < dim; ++s) cols.push_back(d2(g, unit_cochain(g.m(), g.n(), s)));
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  FMatrix A(rows, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < rows; ++r) A(r, c) = cols[c][r];
  return A;
}

}  // namespace

std::size_t cochain_dim(std::size_t m, std::size_t n) {
  std::size_t ee = m ? m * m * (m - 1) / 2 : 0;
  return ee + m * n * n + m * n * (n + 1) / 2;
}

GradedVector cochain_value(const Cochain2Even& phi, std::size_t a, std::size_t b) {
  const std::size_t N = phi.m + phi.n;
  Tensor t = to_tensor(phi);
  GradedVector v(N);
  for (std::size_t k = 0; k < N; ++k) v[k] = t[(a * N + b) * N + k];
  return v;
}

Cochain2Even d1(const SuperAlgebra& g, const EvenEndomorphism& psi) {
  const std::size_t m = g.m(), n = g.n(), N = g.dim();
  FMatrix P = block_diag(psi.A, psi.D);
  Tensor t(N * N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t k = 0; k < N; ++k) {
        FieldElem v;
        for (std::size_t l = 0; l < N; ++l) {
          if (!P(l, a).is_zero() && !g.at(l, b, k).is_zero()) v += P(l, a) * g.at(l, b, k);
          if (!P(l, b).is_zero() && !g.at(a, l, k).is_zero()) v += P(l, b) * g.at(a, l, k);
          if (!g.at(a, b, l).is_zero() && !P(k, l).is_zero()) v -= P(k, l) * g.at(a, b, l);
        }
        t[(a * N + b) * N + k] = v;
      }
  return from_tensor(m, n, t);
}

FVector d2(const SuperAlgebra& g, const Cochain2Even& phi) {
  const std::size_t N = g.dim();
  Tensor t = to_tensor(phi);
  auto P = [&](std::size_t a, std::size_t b, std::size_t k) -> const FieldElem& { return t[(a * N + b) * N + k]; };
  auto par = [&](std::size_t a) { return g.odd(a) ? 1 : 0; };
  FVector out(N * N * N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        long s2 = (par(x) * par(y)) % 2 ? 1 : -1;              // -(-1)^{|x||y|}
        long s3 = (par(z) * (par(x) + par(y))) % 2 ? -1 : 1;   // (-1)^{|z|(|x|+|y|)}
        long s5 = (par(y) * par(z)) % 2 ? -1 : 1;              // (-1)^{|y||z|}
        for (std::size_t k = 0; k < N; ++k) {
          FieldElem v;
          for (std::size_t l = 0; l < N; ++l) {
            if (!P(y, z, l).is_zero() && !g.at(x, l, k).is_zero()) v += P(y, z, l) * g.at(x, l, k);
            if (!P(x, z, l).is_zero() && !g.at(y, l, k).is_zero()) v += FieldElem(s2) * P(x, z, l) * g.at(y, l, k);
            if (!P(x, y, l).is_zero() && !g.at(z, l, k).is_zero()) v += FieldElem(s3) * P(x, y, l) * g.at(z, l, k);
            if (!g.at(x, y, l).is_zero() && !P(l, z, k).is_zero()) v -= g.at(x, y, l) * P(l, z, k);
            if (!g.at(x, z, l).is_zero() && !P(l, y, k).is_zero()) v += FieldElem(s5) * g.at(x, z, l) * P(l, y, k);
            if (!g.at(y, z, l).is_zero() && !P(x, l, k).is_zero()) v += g.at(y, z, l) * P(x, l, k);
          }
          out[((x * N + y) * N + z) * N + k] = v;
        }
      }
  return out;
}

bool is_cocycle(const SuperAlgebra& g, const Cochain2Even& phi) {
  for (const auto& v : d2(g, phi))
    if (!v.is_zero()) return false;
  return true;
}

H2Result h2_even(const SuperAlgebra& g) {
  const std::size_t m = g.m(), n = g.n();
  const std::size_t dim = cochain_dim(m, n);
  H2Result out;
  RrefResult z = rref(d2_matrix(g));
  if (d2_matrix(g).rows() == 0) {
    z.kernel.clear();
    for (std::size_t s = 0; s < dim; ++s) z.kernel.push_back(unit_cochain(m, n, s).coords);
  }
  out.cocycles = z.kernel.size();
  std::vector<FVector> rows = coboundary_vectors(g);
  std::size_t r = rows.empty() ? 0 : rank(rows_matrix(rows, dim));
  out.coboundaries = r;
  for (const auto& v : z.kernel) {
    rows.push_back(v);
    std::size_t r2 = rank(rows_matrix(rows, dim));
    if (r2 > r) {
      r = r2;
      out.basis.push_back({m, n, v});
    } else {
      rows.pop_back();
    }
  }
  out.dim = out.basis.size();
  return out;
}

Cochain2Even parse_cochain(std::size_t m, std::size_t n, const std::string& text) {
  const std::size_t N = m + n;
  Tensor t(N * N * N);
  static const std::regex tail(R"(([ef]\d+)\*\^([ef]\d+)\*@([ef]\d+))");
  auto begin = std::sregex_iterator(text.begin(), text.end(), tail);
  std::size_t pos = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    std::string head = text.substr(pos, static_cast<std::size_t>(it->position()) - pos);
    pos = static_cast<std::size_t>(it->position() + it->length());
    // head is "[+|-] [coeff] [*]"
    std::string h;
    for (char c : head)
      if (c != ' ') h += c;
    FieldElem sign = 1;
    if (!h.empty() && (h[0] == '+' || h[0] == '-')) {
      if (h[0] == '-') sign = -1;
      h.erase(0, 1);
    } else if (it != begin) {
      throw SyntaxError(pos, "expected '+' or '-' between cochain terms");
    }
    if (!h.empty() && h.back() == '*') h.pop_back();
    FieldElem coeff = h.empty() ? sign : sign * field_parse(h);
    std::size_t a = parse_basis_symbol(m, n, (*it)[1]);
    std::size_t b = parse_basis_symbol(m, n, (*it)[2]);
    std::size_t k = parse_basis_symbol(m, n, (*it)[3]);
    bool oa = a >= m, ob = b >= m;
    if (((oa != ob) != (k >= m))) throw InvalidAlgebra("cochain term is not even: " + it->str());
    auto at = [&](std::size_t x, std::size_t y) -> FieldElem& { return t[(x * N + y) * N + k]; };
    if (oa && ob) {
      at(a, b) += coeff;
      if (a != b) at(b, a) += coeff;
    } else {
      at(a, b) += coeff;
      at(b, a) -= coeff;
    }
  }
  std::string rest;
  for (char c : text.substr(pos))
    if (c != ' ') rest += c;
  if (!rest.empty()) throw SyntaxError(pos, "trailing text in cochain");
  return from_tensor(m, n, t);
}

std::string format_cochain(const Cochain2Even& phi) {
  auto sl = slots(phi.m, phi.n);
  std::string out;
  for (std::size_t s = 0; s < sl.size(); ++s) {
    const FieldElem& v = phi.coords[s];
    if (v.is_zero()) continue;
    const Slot& x = sl[s];
    std::string term;
    switch (x.kind) {
      case SlotKind::EE:
        term = basis_name(phi.m, x.i) + "*^" + basis_name(phi.m, x.j) + "*@" + basis_name(phi.m, x.k);
        break;
      case SlotKind::EF:
        term = basis_name(phi.m, x.i) + "*^" + basis_name(phi.m, phi.m + x.j) + "*@" +
               basis_name(phi.m, phi.m + x.k);
        break;
      case SlotKind::FF:
        term = basis_name(phi.m, phi.m + x.i) + "*^" + basis_name(phi.m, phi.m + x.j) + "*@" +
               basis_name(phi.m, x.k);
        break;
    }
    std::string cs = field_format(v);
    bool neg = false;
    if (cs.find_first_of(" +") == std::string::npos && cs.find('-', 1) == std::string::npos && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body = cs == "1" ? term
                       : cs.find_first_of(" +-") == std::string::npos ? cs + "*" + term
                                                                      : "(" + cs + ")*" + term;
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out.empty() ? "0" : out;
}

bool CocycleCheck::ok() const {
  for (bool c : closed)
    if (!c) return false;
  return independent && closed.size() == h2_dim;
}

CocycleCheck validate_cocycles(const SuperAlgebra& g, const std::vector<std::string>& texts) {
  const std::size_t dim = cochain_dim(g.m(), g.n());
  CocycleCheck out;
  std::vector<FVector> rows = coboundary_vectors(g);
  std::size_t base = rows.empty() ? 0 : rank(rows_matrix(rows, dim));
  for (const auto& t : texts) {
    Cochain2Even phi = parse_cochain(g.m(), g.n(), t);
    out.closed.push_back(is_cocycle(g, phi));
    rows.push_back(phi.coords);
  }
  out.independent = rank(rows_matrix(rows, dim)) == base + texts.size();
  out.h2_dim = h2_even(g).dim;
  return out;
}

FieldElem series_at(const Series& s, const FieldElem& t) {
  if (!s.exact()) throw InsufficientPrecision();
  FieldElem acc;
  for (const auto& [e, c] : s.terms()) {
    if (e.get_den() != 1 || e < 0) throw NotRepresentable("series exponent is not a natural number");
    FieldElem p = 1;
    for (long k = 0; k < e.get_num().get_si(); ++k) p *= t;
    acc += c * p;
  }
  return acc;
}

ProbeOutcome deformation_nilpotency_probe(std::size_t m, std::size_t n, const std::vector<BracketText>& brackets,
                                          const FieldElem& t) {
  SuperAlgebra g(m, n, "deformed");
  for (const auto& b : brackets) {
    auto v = expr_eval_vector(*expr_parse(b.value, {true}), m, n);
    std::vector<FieldElem> value(m + n);
    for (std::size_t k = 0; k < m + n; ++k) value[k] = series_at(v[k], t);
    g.set_bracket(parse_basis_symbol(m, n, b.lhs), parse_basis_symbol(m, n, b.rhs), value);
  }
  auto viol = check_jacobi(g);
  if (!viol.empty()) {
    const auto& v = viol.front();
    throw JacobiViolated("Jacobi fails on (" + basis_name(m, v.a) + "," + basis_name(m, v.b) + "," +
                         basis_name(m, v.c) + ")");
  }
  ProbeOutcome out;
  out.series = lower_central_series(g);
  out.result = out.series.back().total() == 0 ? ProbeResult::Nilpotent : ProbeResult::NotNilpotent;
  return out;
}

}  // namespace superlie

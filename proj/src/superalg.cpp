#include "superlie/superalg.hpp"

#include <cctype>
#include <sstream>

namespace superlie {

std::string basis_name(std::size_t m, std::size_t a) {
  return a < m ? "e" + std::to_string(a + 1) : "f" + std::to_string(a - m + 1);
}

std::string basis_name(const SuperAlgebra& g, std::size_t a) { return basis_name(g.m(), a); }

std::size_t parse_basis_symbol(std::size_t m, std::size_t n, const std::string& symbol) {
  if (symbol.size() < 2 || (symbol[0] != 'e' && symbol[0] != 'f')) {
    throw InvalidAlgebra("bad basis symbol '" + symbol + "'");
  }
  std::size_t k = 0;
  for (std::size_t p = 1; p < symbol.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(symbol[p]))) throw InvalidAlgebra("bad basis symbol '" + symbol + "'");
    k = k * 10 + static_cast<std::size_t>(symbol[p] - '0');
  }
  std::size_t limit = symbol[0] == 'e' ? m : n;
  if (k < 1 || k > limit) throw DimensionMismatch("basis symbol '" + symbol + "' out of range");
  return symbol[0] == 'e' ? k - 1 : m + k - 1;
}

SuperAlgebra from_tensors(std::size_t m, std::size_t n, const std::vector<FieldElem>& c,
                          const std::vector<FieldElem>& rho, const std::vector<FieldElem>& gamma,
                          const std::string& name) {
  if (c.size() != m * m * m || rho.size() != m * n * n || gamma.size() != n * n * m) {
    throw DimensionMismatch("tensor shapes do not match (m|n)");
  }
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) -> const FieldElem& { return c[(i * m + j) * m + k]; };
  auto R = [&](std::size_t i, std::size_t j, std::size_t k) -> const FieldElem& { return rho[(i * n + j) * n + k]; };
  auto G = [&](std::size_t i, std::size_t j, std::size_t k) -> const FieldElem& { return gamma[(i * n + j) * m + k]; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (C(i, j, k) != -C(j, i, k)) throw InvalidAlgebra("c is not antisymmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (G(i, j, k) != G(j, i, k)) throw InvalidAlgebra("gamma is not symmetric");
  SuperAlgebra g(m, n, name);
  const std::size_t N = m + n;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      FVector v(N);
      for (std::size_t k = 0; k < m; ++k) v[k] = C(i, j, k);
      g.set_bracket(i, j, v);
    }
    for (std::size_t j = 0; j < n; ++j) {
      FVector v(N);
      for (std::size_t k = 0; k < n; ++k) v[m + k] = R(i, j, k);
      g.set_bracket(i, m + j, v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FVector v(N);
      for (std::size_t k = 0; k < m; ++k) v[k] = G(i, j, k);
      g.set_bracket(m + i, m + j, v);
    }
  return g;
}

GradedVector bracket(const SuperAlgebra& g, const GradedVector& x, const GradedVector& y) {
  const std::size_t N = g.dim();
  if (x.size() != N || y.size() != N) throw DimensionMismatch("vector length does not match the algebra");
  GradedVector out(N);
  for (std::size_t a = 0; a < N; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < N; ++b) {
      if (y[b].is_zero()) continue;
      FieldElem s = x[a] * y[b];
      for (std::size_t k = 0; k < N; ++k)
        if (!g.at(a, b, k).is_zero()) out[k] += s * g.at(a, b, k);
    }
  }
  return out;
}

namespace {

// [[b_a, b_b], b_c]
GradedVector nested(const SuperAlgebra& g, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t N = g.dim();
  GradedVector out(N);
  for (std::size_t k = 0; k < N; ++k) {
    const FieldElem& s = g.at(a, b, k);
    if (s.is_zero()) continue;
    for (std::size_t l = 0; l < N; ++l)
      if (!g.at(k, c, l).is_zero()) out[l] += s * g.at(k, c, l);
  }
  return out;
}

bool all_zero(const GradedVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(GradedVector& y, long s, const GradedVector& x) {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!x[k].is_zero()) y[k] += s == 1 ? x[k] : FieldElem(s) * x[k];
}

}  // namespace

std::vector<JacobiViolation> check_jacobi(const SuperAlgebra& g) {
  const std::size_t N = g.dim();
  std::vector<JacobiViolation> out;
  auto sign = [&](std::size_t x, std::size_t y) { return g.odd(x) && g.odd(y) ? -1L : 1L; };
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        GradedVector r(N);
        axpy(r, sign(a, c), nested(g, a, b, c));
        axpy(r, sign(a, b), nested(g, b, c, a));
        axpy(r, sign(b, c), nested(g, c, a, b));
        if (!all_zero(r)) out.push_back({a, b, c, std::move(r)});
      }
  return out;
}

TripleFormReport check_J1_J2(const SuperAlgebra& g) {
  const std::size_t m = g.m(), N = g.dim();
  TripleFormReport rep;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        GradedVector r(N);
        axpy(r, 1, nested(g, x, y, z));
        axpy(r, 1, nested(g, y, z, x));
        axpy(r, 1, nested(g, z, x, y));
        if (!all_zero(r)) rep.lie.push_back({x, y, z, std::move(r)});
      }
  // rho([x,y]) u = rho(x) rho(y) u - rho(y) rho(x) u
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t u = m; u < N; ++u) {
        GradedVector r(N);
        GradedVector ey(N), ex(N);
        axpy(r, 1, nested(g, x, y, u));
        GradedVector yu = g.bracket_basis(y, u), xu = g.bracket_basis(x, u);
        ex[x] = 1;
        ey[y] = 1;
        axpy(r, -1, bracket(g, ex, yu));
        axpy(r, 1, bracket(g, ey, xu));
        if (!all_zero(r)) rep.representation.push_back({x, y, u, std::move(r)});
      }
  // (J1) [x, G(u,v)] = G(rho(x)u, v) + G(u, rho(x)v)
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t u = m; u < N; ++u)
      for (std::size_t v = m; v < N; ++v) {
        GradedVector ex(N), eu(N), ev(N);
        ex[x] = 1;
        eu[u] = 1;
        ev[v] = 1;
        GradedVector r = bracket(g, ex, g.bracket_basis(u, v));
        axpy(r, -1, bracket(g, g.bracket_basis(x, u), ev));
        axpy(r, -1, bracket(g, eu, g.bracket_basis(x, v)));
        if (!all_zero(r)) rep.j1.push_back({x, u, v, std::move(r)});
      }
  // (J2) rho(G(u,v))w + rho(G(v,w))u + rho(G(u,w))v = 0
  for (std::size_t u = m; u < N; ++u)
    for (std::size_t v = m; v < N; ++v)
      for (std::size_t w = m; w < N; ++w) {
        GradedVector r(N);
        axpy(r, 1, nested(g, u, v, w));
        axpy(r, 1, nested(g, v, w, u));
        axpy(r, 1, nested(g, u, w, v));
        if (!all_zero(r)) rep.j2.push_back({u, v, w, std::move(r)});
      }
  return rep;
}

GradedDim graded_dim(const SuperAlgebra& g, const Subspace& s) {
  GradedDim d;
  for (const auto& v : s) {
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p < g.m()) {
      ++d.even;
    } else {
      ++d.odd;
    }
  }
  return d;
}

Subspace bracket_span(const SuperAlgebra& g, const Subspace& x, const Subspace& y) {
  std::vector<GradedVector> vs;
  for (const auto& a : x)
    for (const auto& b : y) {
      GradedVector v = bracket(g, a, b);
      if (!all_zero(v)) vs.push_back(std::move(v));
    }
  return span_basis(vs, g.dim());
}

namespace {

Subspace whole(const SuperAlgebra& g) {
  Subspace s;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    GradedVector v(g.dim());
    v[a] = 1;
    s.push_back(std::move(v));
  }
  return s;
}

}  // namespace

std::vector<GradedDim> lower_central_series(const SuperAlgebra& g) {
  Subspace all = whole(g);
  Subspace cur = all;
  std::vector<GradedDim> dims{graded_dim(g, cur)};
  for (;;) {
    Subspace next = bracket_span(g, all, cur);
    GradedDim d = graded_dim(g, next);
    if (next.size() == cur.size()) break;
    dims.push_back(d);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return dims;
}

bool is_nilpotent(const SuperAlgebra& g) { return lower_central_series(g).back().total() == 0; }

SuperAlgebra ab(const SuperAlgebra& g) {
  SuperAlgebra out(g.m(), g.n(), g.name().empty() ? "" : "ab(" + g.name() + ")");
  for (std::size_t a = g.m(); a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) out.set_bracket(a, b, g.bracket_basis(a, b));
  return out;
}

SuperAlgebra F(const SuperAlgebra& g) {
  SuperAlgebra out(g.m(), g.n(), g.name().empty() ? "" : "F(" + g.name() + ")");
  for (std::size_t a = 0; a < g.m(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) out.set_bracket(a, b, g.bracket_basis(a, b));
  return out;
}

FMatrix block_diag(const FMatrix& T, const FMatrix& S) {
  const std::size_t m = T.rows(), n = S.rows();
  FMatrix M(m + n, m + n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) M(r, c) = T(r, c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) M(m + r, m + c) = S(r, c);
  return M;
}

namespace {

bool zero_entry(const FieldElem& v) { return v.is_zero(); }
bool zero_entry(const Series& v) { return v.is_exact_zero(); }

template <class S>
void check_grading(const SuperAlgebra& g, const Matrix<S>& M) {
  if (M.rows() != g.dim() || M.cols() != g.dim()) throw DimensionMismatch("basis matrix has the wrong size");
  for (std::size_t r = 0; r < g.dim(); ++r)
    for (std::size_t c = 0; c < g.dim(); ++c)
      if (g.odd(r) != g.odd(c) && !zero_entry(M(r, c))) {
        throw InvalidAlgebra("basis change does not preserve the grading");
      }
}

template <class S>
Matrix<S> sub_block(const Matrix<S>& M, std::size_t off, std::size_t len) {
  Matrix<S> B(len, len);
  for (std::size_t r = 0; r < len; ++r)
    for (std::size_t c = 0; c < len; ++c) B(r, c) = M(off + r, off + c);
  return B;
}

template <class S, class Inverter>
BasicSuperAlgebra<S> transform(const SuperAlgebra& g, const Matrix<S>& M, Inverter inv) {
  check_grading(g, M);
  const std::size_t m = g.m(), n = g.n(), N = g.dim();
  Matrix<S> Minv(N, N);
  if (m) {
    Matrix<S> Ti = inv(sub_block(M, 0, m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) Minv(r, c) = Ti(r, c);
  }
  if (n) {
    Matrix<S> Si = inv(sub_block(M, m, n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) Minv(m + r, m + c) = Si(r, c);
  }
  BasicSuperAlgebra<S> out(m, n, g.name());
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      if (a == b && !g.odd(a)) continue;
      bool parity = g.odd(a) != g.odd(b);
      std::vector<S> w(N);
      for (std::size_t x = 0; x < N; ++x) {
        if (zero_entry(M(x, a))) continue;
        for (std::size_t y = 0; y < N; ++y) {
          if (zero_entry(M(y, b))) continue;
          bool any = false;
          for (std::size_t k = 0; k < N && !any; ++k) any = !g.at(x, y, k).is_zero();
          if (!any) continue;
          S s = M(x, a) * M(y, b);
          for (std::size_t k = 0; k < N; ++k)
            if (!g.at(x, y, k).is_zero()) w[k] += s * S(g.at(x, y, k));
        }
      }
      std::vector<S> v(N);
      for (std::size_t r = 0; r < N; ++r) {
        if (g.odd(r) != parity) continue;
        for (std::size_t k = 0; k < N; ++k)
          if (!zero_entry(w[k]) && !zero_entry(Minv(r, k))) v[r] += Minv(r, k) * w[k];
      }
      out.set_bracket(a, b, v);
    }
  return out;
}

template <class S>
std::string describe_impl(const BasicSuperAlgebra<S>& g, std::string (*fmt)(const S&)) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a; b < g.dim(); ++b) {
      std::string value;
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (zero_entry(g.at(a, b, k))) continue;
        std::string cs = fmt(g.at(a, b, k));
        std::string term;
        if (cs == "1") {
          term = basis_name(g.m(), k);
        } else if (cs == "-1") {
          term = "-" + basis_name(g.m(), k);
        } else {
          bool bare = cs.find_first_of(" +") == std::string::npos && cs.find('-', 1) == std::string::npos;
          term = (bare ? cs : "(" + cs + ")") + "*" + basis_name(g.m(), k);
        }
        value += value.empty() ? term : " + " + term;
      }
      if (value.empty()) continue;
      out << (first ? "" : ", ") << "[" << basis_name(g.m(), a) << "," << basis_name(g.m(), b) << "]=" << value;
      first = false;
    }
  return first ? std::string("abelian") : out.str();
}

std::string fmt_field(const FieldElem& x) { return field_format(x); }
std::string fmt_series(const Series& x) { return x.str(); }

}  // namespace

SuperAlgebra apply_basis_change(const SuperAlgebra& g, const FMatrix& M) {
  return transform<FieldElem>(g, M, [](const FMatrix& B) { return inverse(B); });
}

SeriesAlgebra apply_basis_change(const SuperAlgebra& g, const SMatrix& M, const Rational& cap) {
  return transform<Series>(g, M, [&](const SMatrix& B) { return inverse_series(B, cap); });
}

std::string describe(const SuperAlgebra& g) { return describe_impl<FieldElem>(g, &fmt_field); }
std::string describe(const SeriesAlgebra& g) { return describe_impl<Series>(g, &fmt_series); }

}  // namespace superlie

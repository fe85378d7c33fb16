#include "superlie/gamma23.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superlie::gamma23 {

namespace {

bool is_symmetric(const FMatrix& a) { return a.rows() == a.cols() && a == a.transpose(); }

FMatrix congruence(const FMatrix& S, const FMatrix& a) { return S.transpose() * a * S; }

FieldElem dot(const FVector& x, const FVector& y) {
  FieldElem s;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

FVector scale(const FieldElem& c, FVector v) {
  for (auto& x : v) x = c * x;
  return v;
}

FVector add(FVector x, const FVector& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  return x;
}

FVector column(const FMatrix& a, std::size_t c) {
  FVector v(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) v[r] = a(r, c);
  return v;
}

FMatrix from_columns(const std::vector<FVector>& cols) {
  FMatrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
  return m;
}

FMatrix pencil(const FieldElem& l, const FMatrix& a, const FMatrix& b) { return l * a + b; }

std::size_t span_dim(const FMatrix& a, const FMatrix& b) {
  FMatrix m(2, a.rows() * a.cols());
  for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) {
    m(0, k) = a(k / a.cols(), k % a.cols());
    m(1, k) = b(k / a.cols(), k % a.cols());
  }
  return rank(m);
}

// Newton interpolation through (k, ys[k]), k = 0..n-1.
UPoly interpolate(const std::vector<FieldElem>& ys) {
  std::vector<FieldElem> d = ys;
  const std::size_t n = ys.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = n - 1; k >= j; --k) d[k] = (d[k] - d[k - 1]) / FieldElem(static_cast<long>(j));
  UPoly p = UPoly::constant(d[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) p = p * UPoly({FieldElem(-static_cast<long>(k)), 1}) + UPoly::constant(d[k]);
  return p;
}

// Root multiplicities of a binary form of the given degree, dehomogenized as f.
std::vector<int> multiplicities(const UPoly& f, int form_degree) {
  std::vector<int> out;
  std::vector<int> at_least;
  UPoly cur = f;
  while (cur.degree() > 0) {
    UPoly next = gcd(cur, cur.derivative());
    at_least.push_back(cur.degree() - std::max(next.degree(), 0));
    cur = next;
  }
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (int j = 0; j < exact; ++j) out.push_back(static_cast<int>(k + 1));
  }
  if (form_degree - f.degree() > 0) out.push_back(form_degree - f.degree());
  std::sort(out.rbegin(), out.rend());
  return out;
}

FMatrix minor_pencil_value(const FMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  FMatrix x(2, 2);
  x(0, 0) = m(r0, c0);
  x(0, 1) = m(r0, c1);
  x(1, 0) = m(r1, c0);
  x(1, 1) = m(r1, c1);
  return x;
}

int minor_gcd_degree(const FMatrix& a, const FMatrix& b) {
  UPoly g;
  int infinity = 2;
  bool any = false;
  const std::size_t n = a.rows();
  for (std::size_t r0 = 0; r0 < n; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < n; ++r1)
      for (std::size_t c0 = 0; c0 < n; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < n; ++c1) {
          std::vector<FieldElem> ys;
          for (long l = 0; l < 3; ++l) ys.push_back(determinant(minor_pencil_value(pencil(l, a, b), r0, r1, c0, c1)));
          UPoly p = interpolate(ys);
          if (p.is_zero()) continue;
          any = true;
          g = gcd(g, p);
          infinity = std::min(infinity, 2 - p.degree());
        }
  return any ? g.degree() + infinity : -1;
}

// Basis of the common kernel completed to a basis: complement columns first.
FMatrix kernel_adapted_basis(const std::vector<FVector>& kernel, std::size_t n) {
  std::vector<FVector> cols;
  std::vector<FVector> current = kernel;
  for (std::size_t k = 0; k < n && cols.size() + kernel.size() < n; ++k) {
    FVector e(n);
    e[k] = 1;
    auto trial = current;
    trial.push_back(e);
    if (span_basis(trial, n).size() == trial.size()) {
      current = trial;
      cols.push_back(e);
    }
  }
  for (const auto& v : kernel) cols.push_back(v);
  return from_columns(cols);
}

FMatrix leading_block(const FMatrix& a, std::size_t k) {
  FMatrix b(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) b(r, c) = a(r, c);
  return b;
}

}  // namespace

SymPair make_pair(const FMatrix& g1, const FMatrix& g2) {
  if (g1.rows() != 3 || g2.rows() != 3 || !is_symmetric(g1) || !is_symmetric(g2))
    throw InvalidAlgebra("expected two symmetric 3x3 matrices");
  return {g1, g2};
}

SymPair pair_act(const FMatrix& T, const FMatrix& S, const SymPair& p) {
  if (T.rows() != 2 || T.cols() != 2 || S.rows() != 3 || S.cols() != 3) throw DimensionMismatch("pair_act expects 2x2 and 3x3");
  if (determinant(T).is_zero() || determinant(S).is_zero()) throw Singular();
  FMatrix a = congruence(S, p.g1), b = congruence(S, p.g2);
  return {T(0, 0) * a + T(0, 1) * b, T(1, 0) * a + T(1, 1) * b};
}

SuperAlgebra pair_to_algebra(const SymPair& p) {
  SuperAlgebra g(2, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      std::vector<FieldElem> v(5);
      v[0] = p.g1(i, j);
      v[1] = p.g2(i, j);
      g.set_bracket(2 + i, 2 + j, v);
    }
  return g;
}

SymPair algebra_to_pair(const SuperAlgebra& g) {
  if (g.m() != 2 || g.n() != 3) throw InvalidAlgebra("expected a (2|3) superalgebra");
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      if (a < 2 || b < 2)
        for (std::size_t k = 0; k < 5; ++k)
          if (!g.at(a, b, k).is_zero()) throw InvalidAlgebra("expected zero even bracket and zero action");
  SymPair p;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      p.g1(i, j) = g.gamma(i, j, 0);
      p.g2(i, j) = g.gamma(i, j, 1);
    }
  return p;
}

FMatrix I1() {
  FMatrix m(3, 3);
  m(0, 0) = 1;
  return m;
}
FMatrix I2() {
  FMatrix m(3, 3);
  m(1, 1) = 1;
  return m;
}
FMatrix I3() {
  FMatrix m(3, 3);
  m(2, 2) = 1;
  return m;
}
FMatrix K() {
  FMatrix m(2, 2);
  m(0, 1) = m(1, 0) = 1;
  return m;
}
FMatrix L() {
  FMatrix m(2, 2);
  m(1, 1) = 2;
  return m;
}
FVector u0() { return {0, 1}; }
FVector u1() { return {1, FieldElem::i()}; }
FMatrix Delta(const FieldElem& lambda) {
  FMatrix m(2, 2);
  m(0, 0) = lambda + 1;
  m(0, 1) = m(1, 0) = FieldElem::i();
  m(1, 1) = lambda - 1;
  return m;
}
FMatrix T_lambda(const FieldElem& lambda) {
  FMatrix m(2, 2);
  m(0, 0) = -1;
  m(1, 0) = -lambda;
  m(1, 1) = 1;
  return m;
}
FMatrix R() {
  FieldElem s = FieldElem::sqrt2().inverse();
  FMatrix m(2, 2);
  m(0, 0) = s;
  m(0, 1) = -s;
  m(1, 0) = m(1, 1) = FieldElem::i() * s;
  return m;
}
FMatrix S0() {
  FMatrix i(1, 1);
  i(0, 0) = FieldElem::i();
  return block_diag(R(), i);
}

std::string PencilSignature::str() const {
  std::ostringstream out;
  out << "span " << span_dim << ", generic rank " << generic_rank;
  if (!det_partition.empty()) {
    out << ", det roots [";
    for (std::size_t k = 0; k < det_partition.size(); ++k) out << (k ? "," : "") << det_partition[k];
    out << "]";
  }
  if (minor_gcd_degree >= 0) out << ", rank<=1 degree " << minor_gcd_degree;
  out << ", invertible member " << (has_invertible_member ? "yes" : "no");
  out << ", simdiag " << (simdiag ? "yes" : "no");
  return out.str();
}

UPoly minimal_polynomial(const FMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<FMatrix> powers = {FMatrix::identity(n)};
  for (std::size_t d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * x);
    FMatrix m(n * n, d + 1);
    for (std::size_t k = 0; k <= d; ++k)
      for (std::size_t e = 0; e < n * n; ++e) m(e, k) = powers[k](e / n, e % n);
    RrefResult r = rref(m);
    if (!r.kernel.empty()) return UPoly(r.kernel.front()).monic();
  }
  throw std::logic_error("minimal polynomial degree exceeds the size");
}

bool simdiag_test(const FMatrix& a, const FMatrix& b) {
  const std::size_t n = a.rows();
  if (n <= 1 || span_dim(a, b) <= 1) return true;
  if (rank(a) <= 1 && rank(b) <= 1) return true;
  if (!determinant(a).is_zero()) return is_squarefree(minimal_polynomial(inverse(a) * b));
  for (long l = 0; l <= 6; ++l) {
    FMatrix N = pencil(l, a, b);
    if (!determinant(N).is_zero()) return is_squarefree(minimal_polynomial(inverse(N) * a));
  }
  FMatrix stacked(2 * n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      stacked(r, c) = a(r, c);
      stacked(n + r, c) = b(r, c);
    }
  auto kernel = rref(stacked).kernel;
  if (kernel.empty()) return false;
  FMatrix S = kernel_adapted_basis(kernel, n);
  std::size_t k = n - kernel.size();
  return simdiag_test(leading_block(congruence(S, a), k), leading_block(congruence(S, b), k));
}

PencilSignature signature(const SymPair& p) {
  PencilSignature s;
  s.span_dim = span_dim(p.g1, p.g2);
  s.probe_ranks.push_back(rank(p.g1));
  for (long l = 0; l <= 6; ++l) s.probe_ranks.push_back(rank(pencil(l, p.g1, p.g2)));
  s.generic_rank = *std::max_element(s.probe_ranks.begin(), s.probe_ranks.end());
  s.has_invertible_member = s.generic_rank == 3;
  if (s.generic_rank == 3) {
    std::vector<FieldElem> ys;
    for (long l = 0; l < 4; ++l) ys.push_back(determinant(pencil(l, p.g1, p.g2)));
    s.det_partition = multiplicities(interpolate(ys), 3);
  }
  if (s.generic_rank >= 2) s.minor_gcd_degree = minor_gcd_degree(p.g1, p.g2);
  s.simdiag = simdiag_test(p.g1, p.g2);
  return s;
}

namespace {

// Rank-one symmetric P = a a^t; recovers a when the square roots exist.
std::optional<FVector> rank_one_root(const FMatrix& P) {
  for (std::size_t j = 0; j < P.rows(); ++j) {
    if (P(j, j).is_zero()) continue;
    auto r = field_sqrt(P(j, j));
    if (!r) return std::nullopt;
    return scale(r->inverse(), column(P, j));
  }
  return std::nullopt;
}

std::optional<FVector> normalize(const FVector& v) {
  FieldElem q = dot(v, v);
  if (q.is_zero()) return std::nullopt;
  auto r = field_sqrt(q);
  if (!r) return std::nullopt;
  return scale(r->inverse(), v);
}

// Orthonormal basis of a nondegenerate subspace for the form x^t y.
std::optional<std::vector<FVector>> orthonormal(std::vector<FVector> basis) {
  std::vector<FVector> out;
  while (!basis.empty()) {
    std::vector<FVector> candidates = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        candidates.push_back(add(basis[i], basis[j]));
        candidates.push_back(add(basis[i], scale(-1, basis[j])));
        candidates.push_back(add(basis[i], scale(FieldElem::i(), basis[j])));
        candidates.push_back(add(basis[i], scale(2, basis[j])));
      }
    std::optional<FVector> unit;
    for (const auto& c : candidates)
      if ((unit = normalize(c))) break;
    if (!unit) return std::nullopt;
    std::vector<FVector> rest;
    for (const auto& b : basis) rest.push_back(add(b, scale(-dot(b, *unit), *unit)));
    out.push_back(*unit);
    basis = span_basis(rest, unit->size());
  }
  return out;
}

// Orthonormal s1, s2 spanning the complement of `beta` (or the whole plane) with s1 + i s2 = alpha.
std::optional<std::pair<FVector, FVector>> isotropic_frame(const FVector& alpha, const std::optional<FVector>& beta) {
  const std::size_t n = alpha.size();
  for (std::size_t k = 0; k < n; ++k) {
    FVector z(n);
    z[k] = 1;
    if (beta) z = add(z, scale(-dot(z, *beta), *beta));
    FieldElem a = dot(alpha, z);
    if (a.is_zero()) continue;
    FVector v = add(z, scale(-dot(z, z) / (2 * a), alpha));
    v = scale(FieldElem(2) / a, v);
    FVector s1 = scale(FieldElem(1) / 2, add(alpha, v));
    FVector s2 = scale((2 * FieldElem::i()).inverse(), add(alpha, scale(-1, v)));
    return std::make_pair(s1, s2);
  }
  return std::nullopt;
}

std::vector<FieldElem> eigenvalues(const FMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<FieldElem> ys;
  for (long l = 0; l <= static_cast<long>(n); ++l) ys.push_back(determinant(FieldElem(l) * FMatrix::identity(n) - a));
  UPoly p = interpolate(ys);
  if (n == 2) return roots_upto_quadratic(p);
  UPoly g = gcd(p, p.derivative());
  FieldElem tr = a(0, 0) + a(1, 1) + a(2, 2);
  if (g.degree() == 2) {
    FieldElem l = tr / 3;
    return {l, l, l};
  }
  if (g.degree() == 1) {
    FieldElem l = -g.coeff(0);
    return {l, l, tr - 2 * l};
  }
  static const std::vector<FieldElem> probes = [] {
    std::vector<FieldElem> v;
    for (long k = -4; k <= 4; ++k)
      for (const FieldElem& unit : {FieldElem(1), FieldElem::i(), FieldElem::sqrt2(), FieldElem::i() * FieldElem::sqrt2()}) {
        v.push_back(FieldElem(k) * unit);
        v.push_back(FieldElem(make_rational(k, 2)) * unit);
      }
    return v;
  }();
  for (const auto& r : probes)
    if (p.eval(r).is_zero()) {
      UPoly q, rem;
      divmod(p, UPoly({-r, 1}), q, rem);
      auto rest = roots_upto_quadratic(q);
      if (rest.size() != 2) return {};
      return {r, rest[0], rest[1]};
    }
  return {};
}

}  // namespace

std::optional<SymNormalForm> sym_normal_form(const FMatrix& a) {
  const std::size_t n = a.rows();
  if ((n != 2 && n != 3) || !is_symmetric(a)) throw InvalidAlgebra("sym_normal_form expects a symmetric 2x2 or 3x3 matrix");
  auto ev = eigenvalues(a);
  if (ev.size() != n) return std::nullopt;
  SymNormalForm out;
  const FMatrix id = FMatrix::identity(n);
  if (is_squarefree(minimal_polynomial(a))) {
    std::vector<FieldElem> distinct;
    for (const auto& l : ev)
      if (std::find(distinct.begin(), distinct.end(), l) == distinct.end()) distinct.push_back(l);
    std::sort(distinct.begin(), distinct.end(), [](const FieldElem& x, const FieldElem& y) { return lex_less(x, y); });
    std::vector<FVector> cols;
    for (const auto& l : distinct) {
      auto basis = orthonormal(rref(a - l * id).kernel);
      if (!basis) return std::nullopt;
      for (const auto& v : *basis) {
        cols.push_back(v);
        out.eigenvalues.push_back(l);
      }
    }
    out.S = from_columns(cols);
    out.diagonal = true;
  } else {
    // Non-diagonalizable: lambda is the eigenvalue carrying the Jordan block.
    FieldElem lambda = ev[0];
    FieldElem mu = n == 3 ? ev[2] : FieldElem();
    FMatrix N = a - lambda * id;
    std::optional<FVector> alpha, beta;
    if (n == 2) {
      alpha = rank_one_root(N);
    } else if (lambda != mu) {
      auto z = rref(a - mu * id).kernel;
      if (z.size() != 1 || !(beta = normalize(z.front()))) return std::nullopt;
      FMatrix bb(3, 3);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) bb(r, c) = (*beta)[r] * (*beta)[c];
      alpha = rank_one_root(N - (mu - lambda) * bb);
    } else if ((N * N) == FMatrix(3, 3)) {
      alpha = rank_one_root(N);
      if (!alpha) return std::nullopt;
      FMatrix row(1, 3);
      for (std::size_t c = 0; c < 3; ++c) row(0, c) = (*alpha)[c];
      for (const auto& z : rref(row).kernel)
        if ((beta = normalize(z))) break;
    } else {
      alpha = rank_one_root(N * N);
      if (!alpha) return std::nullopt;
      FMatrix rest = N;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) rest(r, c) -= (*alpha)[r] * (*alpha)[c];
      for (std::size_t k = 0; k < 3 && !beta; ++k) {
        FVector x(3);
        x[k] = 1;
        FieldElem r = dot(*alpha, x);
        if (r.is_zero()) continue;
        FVector y = mat_vec(rest, x);
        FieldElem tau = dot(y, x) / (2 * r);
        beta = scale(r.inverse(), add(y, scale(-tau, *alpha)));
      }
      out.c = 1;
    }
    if (!alpha || (n == 3 && !beta)) return std::nullopt;
    auto frame = isotropic_frame(*alpha, beta);
    if (!frame) return std::nullopt;
    std::vector<FVector> cols = {frame->first, frame->second};
    if (n == 3) cols.push_back(*beta);
    out.S = from_columns(cols);
    out.eigenvalues = {lambda};
    if (n == 3) out.eigenvalues.push_back(mu);
  }
  out.form = congruence(out.S, a);
  if (congruence(out.S, id) != id) throw std::logic_error("normal form transform is not orthogonal");
  return out;
}

const std::vector<Representative>& representatives() {
  static const std::vector<Representative> reps = [] {
    auto ext = [](const FMatrix& b, const FVector& u, const FieldElem& corner) {
      FMatrix m(3, 3);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) m(r, c) = b(r, c);
        m(r, 2) = m(2, r) = u[r];
      }
      m(2, 2) = corner;
      return m;
    };
    FVector zero2 = {0, 0};
    FMatrix Z(3, 3), id = FMatrix::identity(3);
    FMatrix K0 = ext(K(), zero2, 0), K1 = ext(K(), zero2, 1);
    FMatrix L0 = ext(L(), zero2, 0), L1 = ext(L(), zero2, 1), Lu = ext(L(), u0(), 0);
    std::vector<Representative> v = {
        {"(2|3)_0", {Z, Z}},           {"(2|3)_1", {I1(), Z}},          {"(2|3)_2", {I1() + I2(), Z}},
        {"(2|3)_3", {id, Z}},          {"(2|3)_4", {I1(), I2()}},       {"(2|3)_5", {I1() + I3(), I2()}},
        {"(2|3)_6", {I1() + I3(), I2() + I3()}}, {"(2|3)_7", {K0, L0}}, {"(2|3)_8", {K0, Lu}},
        {"(2|3)_9", {K1, L0}},         {"(2|3)_10", {K1, L1}},          {"(2|3)_11", {K1, Lu}}};
    return v;
  }();
  return reps;
}

namespace {

const std::vector<PencilSignature>& representative_signatures() {
  static const std::vector<PencilSignature> sigs = [] {
    std::vector<PencilSignature> s;
    for (const auto& r : representatives()) s.push_back(signature(r.pair));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (s[i] == s[j])
          throw std::logic_error("representatives " + representatives()[i].label + " and " +
                                 representatives()[j].label + " share a signature");
    return s;
  }();
  return sigs;
}

}  // namespace

std::optional<std::string> classify_pair(const SymPair& p) {
  PencilSignature s = signature(p);
  const auto& sigs = representative_signatures();
  std::optional<std::string> found;
  for (std::size_t k = 0; k < sigs.size(); ++k)
    if (sigs[k] == s) {
      if (found) return std::nullopt;
      found = representatives()[k].label;
    }
  return found;
}

}  // namespace superlie::gamma23

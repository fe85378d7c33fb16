#include "superlie/exactla.hpp"

#include <sstream>

namespace superlie {

RrefResult rref(const FMatrix& m) {
  RrefResult out;
  out.reduced = m;
  FMatrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
    FieldElem inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a(r, k).is_zero()) a(r, k) *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a(q, c).is_zero()) continue;
      FieldElem f = a(q, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(r, k).is_zero()) a(q, k) -= f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < out.pivots.size(); ++k) v[out.pivots[k]] = -a(k, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const FMatrix& m) { return rref(m).rank; }

FMatrix inverse(const FMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  FMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult res = rref(aug);
  if (res.rank < n || res.pivots[n - 1] != n - 1) throw Singular();
  FMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = res.reduced(r, n + c);
  return inv;
}

FieldElem determinant(FMatrix a) {
  const std::size_t n = a.rows();
  FieldElem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    FieldElem inv = a(c, c).inverse();
    for (std::size_t q = c + 1; q < n; ++q) {
      if (a(q, c).is_zero()) continue;
      FieldElem f = a(q, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(q, k) -= f * a(c, k);
    }
  }
  return det;
}

FVector mat_vec(const FMatrix& m, const FVector& v) {
  FVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!v[c].is_zero() && !m(r, c).is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

std::vector<FVector> span_basis(const std::vector<FVector>& vectors, std::size_t dim) {
  FMatrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  RrefResult res = rref(m);
  std::vector<FVector> out;
  for (std::size_t r = 0; r < res.rank; ++r) {
    FVector v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = res.reduced(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

SMatrix to_series(const FMatrix& m) {
  SMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s(r, c) = Series(m(r, c));
  return s;
}

namespace {

// Gauss-Jordan on an augmented series matrix whose left block is n x n.
void eliminate(SMatrix& a, std::size_t n, const Rational& cap) {
  const std::size_t cols = a.cols();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    Rational best_v;
    bool undetermined = false;
    for (std::size_t r = c; r < n; ++r) {
      auto v = a(r, c).valuation();
      if (!v) {
        if (!a(r, c).exact()) undetermined = true;
        continue;
      }
      if (best == n || *v < best_v) {
        best = r;
        best_v = *v;
      }
    }
    if (best == n) {
      if (undetermined) throw InsufficientPrecision();
      throw Singular();
    }
    if (best != c)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(best, k), a(c, k));
    Series inv = series_inv(a(c, c), cap);
    for (std::size_t k = 0; k < cols; ++k) a(c, k) = k == c ? Series(1) : a(c, k) * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_exact_zero()) continue;
      Series f = a(r, c);
      for (std::size_t k = 0; k < cols; ++k) {
        if (k == c) {
          a(r, k) = Series();
        } else if (!a(c, k).is_exact_zero()) {
          a(r, k) -= f * a(c, k);
        }
      }
    }
  }
}

}  // namespace

SMatrix inverse_series(const SMatrix& m, const Rational& cap) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  SMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Series(1);
  }
  eliminate(aug, n, cap);
  SMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Series> solve_series(const SMatrix& m, const std::vector<Series>& b, const Rational& cap) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
  SMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  eliminate(aug, n, cap);
  std::vector<Series> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

std::string format_matrix(const FMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << field_format(m(r, c));
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace superlie

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/exactla.hpp"
#include "superlie/scalars.hpp"
#include "superlie/series.hpp"

namespace superlie {

class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct GradedDim {
  std::size_t even = 0, odd = 0;
  friend bool operator==(const GradedDim& x, const GradedDim& y) { return x.even == y.even && x.odd == y.odd; }
  friend bool operator!=(const GradedDim& x, const GradedDim& y) { return !(x == y); }
  std::size_t total() const { return even + odd; }
  std::string str() const { return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")"; }
};

// Structure constants over S. Basis indices run over e_1..e_m then f_1..f_n;
// table(a, b, k) is the k-th coordinate of [b_a, b_b].
template <class S>
class BasicSuperAlgebra {
 public:
  BasicSuperAlgebra() = default;
  BasicSuperAlgebra(std::size_t m, std::size_t n, std::string name = {})
      : m_(m), n_(n), name_(std::move(name)), table_((m + n) * (m + n) * (m + n)) {}

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return m_ + n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  bool odd(std::size_t a) const { return a >= m_; }

  const S& at(std::size_t a, std::size_t b, std::size_t k) const { return table_[(a * dim() + b) * dim() + k]; }

  const S& c(std::size_t i, std::size_t j, std::size_t k) const { return at(i, j, k); }
  const S& rho(std::size_t i, std::size_t j, std::size_t k) const { return at(i, m_ + j, m_ + k); }
  const S& gamma(std::size_t i, std::size_t j, std::size_t k) const { return at(m_ + i, m_ + j, k); }

  // Sets [b_a, b_b] and the mirrored bracket [b_b, b_a].
  void set_bracket(std::size_t a, std::size_t b, const std::vector<S>& value) {
    if (a >= dim() || b >= dim() || value.size() != dim()) throw DimensionMismatch("bracket index out of range");
    bool parity = odd(a) != odd(b);
    bool symmetric = odd(a) && odd(b);
    if (a == b && !symmetric) {
      for (const auto& v : value)
        if (!is_zero(v)) throw InvalidAlgebra("[x,x] must vanish for even x");
    }
    for (std::size_t k = 0; k < dim(); ++k) {
      if (odd(k) != parity && !is_zero(value[k])) throw InvalidAlgebra("bracket value violates the grading");
      ref(a, b, k) = value[k];
      ref(b, a, k) = symmetric ? value[k] : S(-value[k]);
    }
  }

  std::vector<S> bracket_basis(std::size_t a, std::size_t b) const {
    std::vector<S> out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = at(a, b, k);
    return out;
  }

  friend bool operator==(const BasicSuperAlgebra& x, const BasicSuperAlgebra& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.table_ == y.table_;
  }

 private:
  static bool is_zero(const FieldElem& v) { return v.is_zero(); }
  static bool is_zero(const Series& v) { return v.is_exact_zero(); }
  S& ref(std::size_t a, std::size_t b, std::size_t k) { return table_[(a * dim() + b) * dim() + k]; }

  std::size_t m_ = 0, n_ = 0;
  std::string name_;
  std::vector<S> table_;
};

using SuperAlgebra = BasicSuperAlgebra<FieldElem>;
using SeriesAlgebra = BasicSuperAlgebra<Series>;
using GradedVector = FVector;  // even coordinates first, then odd

SuperAlgebra from_tensors(std::size_t m, std::size_t n, const std::vector<FieldElem>& c,
                          const std::vector<FieldElem>& rho, const std::vector<FieldElem>& gamma,
                          const std::string& name = {});

std::string basis_name(const SuperAlgebra& g, std::size_t a);
std::string basis_name(std::size_t m, std::size_t a);
std::size_t parse_basis_symbol(std::size_t m, std::size_t n, const std::string& symbol);

GradedVector bracket(const SuperAlgebra& g, const GradedVector& x, const GradedVector& y);

struct JacobiViolation {
  std::size_t a, b, c;
  GradedVector residual;
};
std::vector<JacobiViolation> check_jacobi(const SuperAlgebra& g);

struct TripleFormReport {
  std::vector<JacobiViolation> lie;             // Jacobi on the even part
  std::vector<JacobiViolation> representation;  // rho([x,y]) = [rho(x), rho(y)]
  std::vector<JacobiViolation> j1;
  std::vector<JacobiViolation> j2;
  bool ok() const { return lie.empty() && representation.empty() && j1.empty() && j2.empty(); }
};
TripleFormReport check_J1_J2(const SuperAlgebra& g);

// Subspaces are spanned by rows in RREF.
using Subspace = std::vector<GradedVector>;
GradedDim graded_dim(const SuperAlgebra& g, const Subspace& s);
Subspace bracket_span(const SuperAlgebra& g, const Subspace& x, const Subspace& y);

std::vector<GradedDim> lower_central_series(const SuperAlgebra& g);
bool is_nilpotent(const SuperAlgebra& g);

SuperAlgebra ab(const SuperAlgebra& g);
SuperAlgebra F(const SuperAlgebra& g);

// Columns of M are the new basis vectors; M must preserve the grading.
SuperAlgebra apply_basis_change(const SuperAlgebra& g, const FMatrix& M);
SeriesAlgebra apply_basis_change(const SuperAlgebra& g, const SMatrix& M, const Rational& cap = kDefaultPrecision);
FMatrix block_diag(const FMatrix& T, const FMatrix& S);

// Human-readable nonzero brackets, e.g. "[f1,f1]=e1".
std::string describe(const SuperAlgebra& g);
std::string describe(const SeriesAlgebra& g);

}  // namespace superlie

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superlie/scalars.hpp"

namespace superlie {

// Univariate polynomial over the field, coefficients low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElem> coeffs);
  static UPoly constant(const FieldElem& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const FieldElem& lead() const { return c_.back(); }
  FieldElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FieldElem(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FieldElem eval(const FieldElem& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& x, const UPoly& y);
  friend UPoly operator-(const UPoly& x, const UPoly& y);
  friend UPoly operator*(const UPoly& x, const UPoly& y);
  friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly gcd(UPoly a, UPoly b);  // monic, or zero
UPoly squarefree_part(const UPoly& p);
bool is_squarefree(const UPoly& p);
// Roots in the field of a polynomial of degree <= 2 (with multiplicity for degree 2).
std::vector<FieldElem> roots_upto_quadratic(const UPoly& p);

// Multivariate polynomials for the emptiness test.
using Monomial = std::vector<std::uint8_t>;

struct MonomialOrder {
  // Degree-lexicographic, largest first.
  bool operator()(const Monomial& x, const Monomial& y) const;
};

class MPoly {
 public:
  using Terms = std::map<Monomial, FieldElem, MonomialOrder>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const FieldElem& c);
  static MPoly var(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_nonzero_constant() const;
  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const FieldElem& lead_coeff() const { return terms_.begin()->second; }
  int total_degree() const;

  void add_term(const Monomial& mono, const FieldElem& c);
  MPoly scaled(const FieldElem& c, const Monomial& shift) const;
  FieldElem eval(const std::vector<FieldElem>& point) const;

  friend MPoly operator+(const MPoly& x, const MPoly& y);
  friend MPoly operator-(const MPoly& x, const MPoly& y);
  friend MPoly operator*(const MPoly& x, const MPoly& y);

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

struct PolySystem {
  std::vector<std::string> variables;
  std::vector<MPoly> polynomials;
};

struct GroebnerCaps {
  std::size_t max_basis = 500;
  int max_degree = 12;
};

enum class Triviality { Empty, NonEmpty, Unknown };

Triviality ideal_triviality(const PolySystem& ps, const GroebnerCaps& caps = {});

}  // namespace superlie

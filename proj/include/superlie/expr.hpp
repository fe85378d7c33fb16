#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/series.hpp"

namespace superlie {

enum class ExprKind { Lit, I, Sqrt2, T, Basis, Neg, Add, Sub, Mul, Div, Pow, Sqrt };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Rational value;       // Lit: literal value (>= 0); Pow: exponent
  bool odd = false;     // Basis: f_k when true, e_k otherwise
  std::size_t index = 0;  // Basis: zero-based index
  ExprPtr lhs, rhs;     // Neg/Sqrt/Pow use lhs only

  static ExprPtr lit(const Rational& q);
  static ExprPtr leaf(ExprKind k);
  static ExprPtr basis(bool odd, std::size_t index);
  static ExprPtr unary(ExprKind k, ExprPtr x);
  static ExprPtr binary(ExprKind k, ExprPtr x, ExprPtr y);
  static ExprPtr pow(ExprPtr x, const Rational& exponent);
};

bool expr_equal(const Expr& x, const Expr& y);

struct ParseOptions {
  // Accept e1..em and f1..fn as atoms (basis-vector mode).
  bool allow_basis = false;
};

ExprPtr expr_parse(std::string_view text, const ParseOptions& opts = {});
std::string expr_format(const Expr& e);

enum class EvalFailure { NotInvertible, NotRepresentable, InsufficientPrecision, TypeError };

class EvalError : public std::runtime_error {
 public:
  EvalError(EvalFailure kind, const std::string& subexpr, const std::string& detail);
  EvalFailure kind() const { return kind_; }
  const std::string& subexpr() const { return subexpr_; }

 private:
  EvalFailure kind_;
  std::string subexpr_;
};

Series expr_eval(const Expr& e, const Rational& precision = kDefaultPrecision);

// Coordinates of a linear combination of basis vectors, even block first.
// Throws EvalError(TypeError) if the expression is not linear in the basis.
std::vector<Series> expr_eval_vector(const Expr& e, std::size_t m, std::size_t n,
                                     const Rational& precision = kDefaultPrecision);

}  // namespace superlie

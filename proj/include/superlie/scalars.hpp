#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Parse failure; position is a byte offset into the input.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);
// Exact square root in Q, if any.
std::optional<Rational> rational_sqrt(const Rational& q);

// a + b*i + c*sqrt2 + d*i*sqrt2
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElem(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static FieldElem i() { return {0, 1, 0, 0}; }
  static FieldElem sqrt2() { return {0, 0, 1, 0}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_one() const { return a_ == 1 && is_rational(); }

  FieldElem inverse() const;
  FieldElem conj_sqrt2() const { return {a_, b_, -c_, -d_}; }

  FieldElem& operator+=(const FieldElem& y);
  FieldElem& operator-=(const FieldElem& y);
  FieldElem& operator*=(const FieldElem& y);
  FieldElem& operator/=(const FieldElem& y) { return *this *= y.inverse(); }

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }
  friend FieldElem operator-(const FieldElem& x) { return {-x.a_, -x.b_, -x.c_, -x.d_}; }
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

  // Lexicographic order on (a, b, c, d); used only for branch choice and sorting.
  friend bool lex_less(const FieldElem& x, const FieldElem& y);

 private:
  Rational a_, b_, c_, d_;
};

enum class ArithOp { Add, Sub, Mul, Div };
FieldElem field_arith(const FieldElem& x, const FieldElem& y, ArithOp op);

// Square root in Q(i, sqrt2); nullopt when x is not a square there.
std::optional<FieldElem> field_sqrt(const FieldElem& x);

FieldElem field_parse(std::string_view text);
std::string field_format(const FieldElem& x);

std::size_t hash_value(const FieldElem& x);

}  // namespace superlie

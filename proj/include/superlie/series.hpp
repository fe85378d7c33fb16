#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "superlie/scalars.hpp"

namespace superlie {

inline constexpr long kDefaultPrecision = 8;

class NotInvertible : public std::domain_error {
 public:
  NotInvertible() : std::domain_error("series has no determinable leading term") {}
};

class InsufficientPrecision : public std::runtime_error {
 public:
  InsufficientPrecision() : std::runtime_error("constant term not determined at this precision") {}
};

class NotRepresentable : public std::domain_error {
 public:
  explicit NotRepresentable(const std::string& what) : std::domain_error(what) {}
};

// Finite sum of c_q t^q plus O(t^precision). An absent precision means the
// sum is exact.
class Series {
 public:
  using Terms = std::map<Rational, FieldElem>;

  Series() = default;
  Series(const FieldElem& c) { set(0, c); }  // NOLINT(google-explicit-constructor)
  Series(long c) : Series(FieldElem(c)) {}   // NOLINT(google-explicit-constructor)

  static Series monomial(const FieldElem& c, const Rational& exponent);
  static Series t() { return monomial(1, 1); }
  static Series zero_to(const Rational& precision);

  const Terms& terms() const { return terms_; }
  const std::optional<Rational>& precision() const { return precision_; }
  bool exact() const { return !precision_.has_value(); }

  // Smallest exponent with a known nonzero coefficient.
  std::optional<Rational> valuation() const;
  // Lower bound on the order: valuation, else precision; nullopt for exact zero.
  std::optional<Rational> order_bound() const;
  FieldElem coeff(const Rational& exponent) const;
  bool is_exact_zero() const { return exact() && terms_.empty(); }
  // Zero as far as known (all known coefficients vanish).
  bool is_zero_to_precision() const { return terms_.empty(); }
  bool is_exact_constant() const;

  Series truncated(const Rational& precision) const;

  Series& operator+=(const Series& y);
  Series& operator-=(const Series& y);
  friend Series operator+(Series x, const Series& y) { return x += y; }
  friend Series operator-(Series x, const Series& y) { return x -= y; }
  friend Series operator-(const Series& x);
  friend Series operator*(const Series& x, const Series& y);
  Series& operator*=(const Series& y) { return *this = *this * y; }

  // Exact equality of representation (terms and precision).
  friend bool operator==(const Series& x, const Series& y) {
    return x.precision_ == y.precision_ && x.terms_ == y.terms_;
  }

  // Coefficients agree wherever both are determined.
  bool agrees_with(const Series& y) const;

  std::string str() const;

 private:
  void set(const Rational& e, const FieldElem& c);
  void clip();

  Terms terms_;
  std::optional<Rational> precision_;
};

enum class SeriesOp { Add, Sub, Mul };
Series series_arith(const Series& x, const Series& y, SeriesOp op);

// cap: absolute working precision for results that would otherwise be infinite.
Series series_inv(const Series& x, const Rational& cap = kDefaultPrecision);
// nullopt when the leading coefficient has no square root in the field.
std::optional<Series> series_sqrt(const Series& x, const Rational& cap = kDefaultPrecision);
// x^q; non-integer q needs a denominator that is a power of two.
Series series_pow(const Series& x, const Rational& q, const Rational& cap = kDefaultPrecision);

struct Limit {
  bool diverges = false;
  FieldElem value;
};
// Throws InsufficientPrecision when the constant term is undetermined.
Limit series_limit_at_zero(const Series& x);

}  // namespace superlie

#include "superlie/series.hpp"

#include <algorithm>
#include <sstream>

namespace superlie {

namespace {

using Bound = std::optional<Rational>;  // nullopt = +infinity

Bound bmin(const Bound& x, const Bound& y) {
  if (!x) return y;
  if (!y) return x;
  return *x < *y ? x : y;
}

Bound badd(const Bound& x, const Bound& y) {
  if (!x || !y) return std::nullopt;
  return Rational(*x + *y);
}

bool below(const Rational& e, const Bound& p) { return !p || e < *p; }

}  // namespace

Series Series::monomial(const FieldElem& c, const Rational& exponent) {
  Series s;
  s.set(exponent, c);
  return s;
}

Series Series::zero_to(const Rational& precision) {
  Series s;
  s.precision_ = precision;
  return s;
}

void Series::set(const Rational& e, const FieldElem& c) {
  if (c.is_zero() || !below(e, precision_)) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

void Series::clip() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || !below(it->first, precision_)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

std::optional<Rational> Series::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<Rational> Series::order_bound() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return precision_;
}

FieldElem Series::coeff(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? FieldElem() : it->second;
}

bool Series::is_exact_constant() const {
  return exact() && (terms_.empty() || (terms_.size() == 1 && sgn(terms_.begin()->first) == 0));
}

Series Series::truncated(const Rational& precision) const {
  Series s = *this;
  s.precision_ = bmin(precision_, precision);
  s.clip();
  return s;
}

Series& Series::operator+=(const Series& y) {
  precision_ = bmin(precision_, y.precision_);
  for (const auto& [e, c] : y.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
    }
  }
  clip();
  return *this;
}

Series& Series::operator-=(const Series& y) { return *this += -y; }

Series operator-(const Series& x) {
  Series r = x;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Series operator*(const Series& x, const Series& y) {
  Series r;
  r.precision_ = bmin(badd(x.precision_, y.order_bound()), badd(y.precision_, x.order_bound()));
  if (x.is_exact_zero() || y.is_exact_zero()) {
    r.precision_.reset();
    return r;
  }
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      Rational e = ex + ey;
      if (!below(e, r.precision_)) break;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(e), cx * cy);
      } else {
        it->second += cx * cy;
      }
    }
  }
  r.clip();
  return r;
}

bool Series::agrees_with(const Series& y) const {
  Bound p = bmin(precision_, y.precision_);
  Series d = *this - y;
  for (const auto& [e, c] : d.terms_) {
    if (below(e, p)) return false;
  }
  return true;
}

std::string Series::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = field_format(c);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (!first) out << " + ";
    first = false;
    if (sgn(e) == 0) {
      out << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (c.is_one()) {
    } else if (c == FieldElem(-1)) {
      out << "-";
    } else {
      out << (compound ? "(" + cs + ")" : cs) << "*";
    }
    out << "t";
    if (e != 1) {
      if (e.get_den() == 1 && sgn(e) > 0) {
        out << "^" << e.get_str();
      } else {
        out << "^(" << e.get_str() << ")";
      }
    }
  }
  if (precision_) {
    if (!first) out << " + ";
    out << "O(t^" << (precision_->get_den() == 1 && sgn(*precision_) >= 0 ? precision_->get_str()
                                                                           : "(" + precision_->get_str() + ")")
        << ")";
  } else if (first) {
    out << "0";
  }
  return out.str();
}

Series series_arith(const Series& x, const Series& y, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return x + y;
    case SeriesOp::Sub: return x - y;
    case SeriesOp::Mul: return x * y;
  }
  return {};
}

namespace {

struct Factored {
  FieldElem lead;
  Rational v;
  Series u;  // x = lead * t^v * (1 + u)
};

Factored factor(const Series& x) {
  auto v = x.valuation();
  if (!v) throw NotInvertible();
  FieldElem lead = x.coeff(*v);
  FieldElem li = lead.inverse();
  Series u = x.exact() ? Series() : Series::zero_to(*x.precision() - *v);
  for (const auto& [e, c] : x.terms()) {
    if (e == *v) continue;
    u += Series::monomial(c * li, e - *v);
  }
  return {lead, *v, u};
}

Series shift_scale(const Series& s, const Rational& by, const FieldElem& k) {
  Series r = s.exact() ? Series() : Series::zero_to(*s.precision() + by);
  for (const auto& [e, c] : s.terms()) r += Series::monomial(c * k, e + by);
  return r;
}

// (1+u)^q to relative precision R, u of positive order.
Series one_plus_pow(const Series& u, const Rational& q, const Rational& R) {
  Series result = Series(1).truncated(R);
  Series power = Series(1);
  Rational binom = 1;
  for (long k = 1;; ++k) {
    power = (power * u).truncated(R);
    binom = binom * (q - (k - 1)) / k;
    if (power.is_zero_to_precision()) break;
    if (sgn(binom) != 0) result += Series::monomial(FieldElem(binom), 0) * power;
  }
  return result.truncated(R);
}

bool is_power_of_two(const mpz_class& z) { return z > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

Series general_pow(const Series& x, const Rational& q, const FieldElem& cq, const Rational& cap) {
  Factored f = factor(x);
  Rational lead_exp = q * f.v;
  if (f.u.is_exact_zero()) return Series::monomial(cq, lead_exp);
  Rational pa = cap;
  if (!x.exact()) pa = std::min(pa, Rational(lead_exp + *x.precision() - f.v));
  Rational rel = pa - lead_exp;
  return shift_scale(one_plus_pow(f.u, q, rel), lead_exp, cq);
}

}  // namespace

Series series_inv(const Series& x, const Rational& cap) {
  auto v = x.valuation();
  if (!v) throw NotInvertible();
  return general_pow(x, -1, x.coeff(*v).inverse(), cap);
}

std::optional<Series> series_sqrt(const Series& x, const Rational& cap) {
  auto v = x.valuation();
  if (!v) {
    if (x.is_exact_zero()) return Series();
    throw NotInvertible();
  }
  auto s = field_sqrt(x.coeff(*v));
  if (!s) return std::nullopt;
  return general_pow(x, Rational(1, 2), *s, cap);
}

Series series_pow(const Series& x, const Rational& q, const Rational& cap) {
  if (q.get_den() == 1) {
    if (sgn(q) == 0) return Series(1);
    if (sgn(q) < 0) return series_pow(series_inv(x, cap), Rational(-q), cap);
    Series base = x, acc(1);
    mpz_class n = q.get_num();
    while (n > 0) {
      if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
      n /= 2;
      if (n > 0) base = base * base;
    }
    return acc;
  }
  if (!is_power_of_two(q.get_den())) {
    throw NotRepresentable("exponent denominator must be a power of two: " + q.get_str());
  }
  auto v = x.valuation();
  if (!v) {
    if (x.is_exact_zero() && sgn(q) > 0) return Series();
    throw NotInvertible();
  }
  FieldElem root = x.coeff(*v);
  mpz_class den = q.get_den();
  while (den > 1) {
    auto s = field_sqrt(root);
    if (!s) throw NotRepresentable("no square root of " + field_format(root) + " in the field");
    root = *s;
    den /= 2;
  }
  long p = q.get_num().get_si();
  FieldElem cq = 1;
  for (long k = 0; k < std::labs(p); ++k) cq *= root;
  if (p < 0) cq = cq.inverse();
  return general_pow(x, q, cq, cap);
}

Limit series_limit_at_zero(const Series& x) {
  if (auto v = x.valuation(); v && sgn(*v) < 0) return {true, {}};
  if (x.precision() && sgn(*x.precision()) <= 0) throw InsufficientPrecision();
  return {false, x.coeff(0)};
}

}  // namespace superlie

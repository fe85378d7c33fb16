#include "superlie/scalars.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace superlie {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t start = 0;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    start = 1;
  }
  auto slash = s.find('/', start);
  std::string num = s.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  if (!digits(num)) throw SyntaxError(start, "expected integer");
  if (!digits(den)) throw SyntaxError(slash + 1, "expected integer");
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero();
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

namespace {

// Gaussian rationals re + im*i; the field is Q(i)[r]/(r^2 - 2).
struct Gauss {
  Rational re, im;
  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

Gauss gmul(const Gauss& x, const Gauss& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Gauss gsub(const Gauss& x, const Gauss& y) { return {x.re - y.re, x.im - y.im}; }
Gauss gadd(const Gauss& x, const Gauss& y) { return {x.re + y.re, x.im + y.im}; }
Gauss gscale(const Gauss& x, const Rational& s) { return {x.re * s, x.im * s}; }
Gauss ginv(const Gauss& x) {
  Rational n = x.re * x.re + x.im * x.im;
  if (sgn(n) == 0) throw DivisionByZero();
  return {x.re / n, -x.im / n};
}

std::optional<Gauss> gsqrt(const Gauss& x) {
  if (sgn(x.im) == 0) {
    if (sgn(x.re) >= 0) {
      if (auto r = rational_sqrt(x.re)) return Gauss{*r, 0};
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-x.re)) return Gauss{0, *r};
    return std::nullopt;
  }
  auto n = rational_sqrt(x.re * x.re + x.im * x.im);
  if (!n) return std::nullopt;
  Rational alpha2 = (x.re + *n) / 2;
  auto alpha = rational_sqrt(alpha2);
  if (!alpha || sgn(*alpha) == 0) return std::nullopt;
  return Gauss{*alpha, x.im / (2 * *alpha)};
}

FieldElem from_parts(const Gauss& u, const Gauss& v) { return {u.re, u.im, v.re, v.im}; }

}  // namespace

FieldElem& FieldElem::operator+=(const FieldElem& y) {
  a_ += y.a_;
  b_ += y.b_;
  c_ += y.c_;
  d_ += y.d_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  c_ -= y.c_;
  d_ -= y.d_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& y) { return *this = *this * y; }

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
  if (x.is_rational()) {
    if (sgn(x.a_) == 0) return {};
    return {x.a_ * y.a_, x.a_ * y.b_, x.a_ * y.c_, x.a_ * y.d_};
  }
  if (y.is_rational()) {
    if (sgn(y.a_) == 0) return {};
    return {x.a_ * y.a_, x.b_ * y.a_, x.c_ * y.a_, x.d_ * y.a_};
  }
  Rational a = x.a_ * y.a_ - x.b_ * y.b_ + 2 * (x.c_ * y.c_) - 2 * (x.d_ * y.d_);
  Rational b = x.a_ * y.b_ + x.b_ * y.a_ + 2 * (x.c_ * y.d_) + 2 * (x.d_ * y.c_);
  Rational c = x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_;
  Rational d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElem(Rational(1 / a_));
  Gauss u{a_, b_}, v{c_, d_};
  Gauss n = gsub(gmul(u, u), gscale(gmul(v, v), 2));
  Gauss ni = ginv(n);
  return from_parts(gmul(u, ni), gmul(Gauss{-v.re, -v.im}, ni));
}

bool lex_less(const FieldElem& x, const FieldElem& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  if (x.c_ != y.c_) return x.c_ < y.c_;
  return x.d_ < y.d_;
}

FieldElem field_arith(const FieldElem& x, const FieldElem& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  return {};
}

std::optional<FieldElem> field_sqrt(const FieldElem& x) {
  Gauss x0{x.a(), x.b()}, x1{x.c(), x.d()};
  std::optional<FieldElem> s;
  if (x1.zero()) {
    if (auto u = gsqrt(x0)) {
      s = from_parts(*u, {});
    } else if (auto v = gsqrt(gscale(x0, Rational(1, 2)))) {
      s = from_parts({}, *v);
    }
  } else {
    // u^2 + 2 v^2 = x0, 2 u v = x1
    Gauss disc = gsub(gmul(x0, x0), gscale(gmul(x1, x1), 2));
    if (auto root = gsqrt(disc)) {
      for (int sign : {1, -1}) {
        Gauss w = gscale(gadd(x0, gscale(*root, sign)), Rational(1, 2));
        if (w.zero()) continue;
        if (auto u = gsqrt(w)) {
          Gauss v = gmul(x1, ginv(gscale(*u, 2)));
          s = from_parts(*u, v);
          break;
        }
      }
    }
  }
  if (!s) return std::nullopt;
  FieldElem neg = -*s;
  return lex_less(*s, neg) ? neg : *s;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  FieldElem run() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty scalar");
    FieldElem v = sum();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected character");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElem sum() {
    FieldElem v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }

  FieldElem product() {
    FieldElem v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        FieldElem d = unary();
        if (d.is_zero()) throw DivisionByZero();
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  FieldElem atom() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "expected scalar atom");
    if (eat('(')) {
      FieldElem v = sum();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      return v;
    }
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return FieldElem(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (s_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return FieldElem::sqrt2();
    }
    if (s_.substr(pos_, 7) == "sqrt(2)") {
      pos_ += 7;
      return FieldElem::sqrt2();
    }
    if (ch == 'i' && (pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return FieldElem::i();
    }
    throw SyntaxError(pos_, "expected scalar atom");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem field_parse(std::string_view text) { return ScalarParser(text).run(); }

std::string field_format(const FieldElem& x) {
  const Rational* coeffs[4] = {&x.a(), &x.b(), &x.c(), &x.d()};
  const char* syms[4] = {"", "i", "sqrt2", "i*sqrt2"};
  std::vector<std::string> terms;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = *coeffs[k];
    if (sgn(q) == 0) continue;
    if (k == 0) {
      terms.push_back(format_rational(q));
    } else if (q == 1) {
      terms.emplace_back(syms[k]);
    } else if (q == -1) {
      terms.push_back(std::string("-") + syms[k]);
    } else {
      terms.push_back(format_rational(q) + "*" + syms[k]);
    }
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t k = 1; k < terms.size(); ++k) {
    if (terms[k][0] == '-') {
      out += " - " + terms[k].substr(1);
    } else {
      out += " + " + terms[k];
    }
  }
  return out;
}

std::size_t hash_value(const FieldElem& x) {
  std::size_t h = 0;
  for (const Rational* q : {&x.a(), &x.b(), &x.c(), &x.d()}) {
    h = h * 1000003u + std::hash<std::string>{}(q->get_str());
  }
  return h;
}

}  // namespace superlie

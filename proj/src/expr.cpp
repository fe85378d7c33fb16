#include "superlie/expr.hpp"

#include <cctype>
#include <optional>

namespace superlie {

ExprPtr Expr::lit(const Rational& q) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Lit;
  e->value = q;
  return e;
}

ExprPtr Expr::leaf(ExprKind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

ExprPtr Expr::basis(bool odd, std::size_t index) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Basis;
  e->odd = odd;
  e->index = index;
  return e;
}

ExprPtr Expr::unary(ExprKind k, ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(x);
  return e;
}

ExprPtr Expr::binary(ExprKind k, ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(x);
  e->rhs = std::move(y);
  return e;
}

ExprPtr Expr::pow(ExprPtr x, const Rational& exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Pow;
  e->lhs = std::move(x);
  e->value = exponent;
  return e;
}

bool expr_equal(const Expr& x, const Expr& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ExprKind::Lit: return x.value == y.value;
    case ExprKind::I:
    case ExprKind::Sqrt2:
    case ExprKind::T: return true;
    case ExprKind::Basis: return x.odd == y.odd && x.index == y.index;
    case ExprKind::Neg:
    case ExprKind::Sqrt: return expr_equal(*x.lhs, *y.lhs);
    case ExprKind::Pow: return x.value == y.value && expr_equal(*x.lhs, *y.lhs);
    default: return expr_equal(*x.lhs, *y.lhs) && expr_equal(*x.rhs, *y.rhs);
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("'+', '-', '*', '/' or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos_, "expected " + expected);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip();
    return pos_ < s_.size() && s_[pos_] == ch;
  }

  bool eat(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (eat('+')) {
        e = Expr::binary(ExprKind::Add, e, term());
      } else if (eat('-')) {
        e = Expr::binary(ExprKind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    if (eat('-')) return Expr::unary(ExprKind::Neg, term());
    ExprPtr e = factor();
    for (;;) {
      if (eat('*')) {
        e = Expr::binary(ExprKind::Mul, e, factor());
      } else if (eat('/')) {
        e = Expr::binary(ExprKind::Div, e, factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (eat('-')) return Expr::unary(ExprKind::Neg, factor());
    ExprPtr base = atom();
    if (!eat('^')) return base;
    if (eat('(')) {
      skip();
      bool neg = eat('-');
      auto q = rational_literal();
      if (!q) fail("rational exponent");
      if (!eat(')')) fail("')'");
      return Expr::pow(base, neg ? Rational(-*q) : *q);
    }
    skip();
    auto q = integer();
    if (!q) fail("'(' or integer exponent");
    return Expr::pow(base, *q);
  }

  std::optional<Rational> integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return Rational(mpz_class(std::string(s_.substr(start, pos_ - start))));
  }

  // digits, or digits '/' digits (greedy)
  std::optional<Rational> rational_literal() {
    skip();
    auto num = integer();
    if (!num) return std::nullopt;
    std::size_t save = pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t at = pos_;
        auto den = integer();
        if (*den == 0) {
          pos_ = at;
          throw SyntaxError(at, "nonzero denominator");
        }
        Rational q = *num / *den;
        q.canonicalize();
        return q;
      }
    }
    pos_ = save;
    return num;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail(expectations());
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) fail("')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Expr::lit(*rational_literal());
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view word = s_.substr(start, pos_ - start);
      std::size_t digits_start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view digits = s_.substr(digits_start, pos_ - digits_start);
      if (digits.empty()) {
        if (word == "t") return Expr::leaf(ExprKind::T);
        if (word == "i") return Expr::leaf(ExprKind::I);
        if (word == "sqrt") {
          if (!eat('(')) fail("'('");
          ExprPtr inner = expr();
          if (!eat(')')) fail("')'");
          return Expr::unary(ExprKind::Sqrt, inner);
        }
      } else if (word == "sqrt" && digits == "2") {
        return Expr::leaf(ExprKind::Sqrt2);
      } else if (opts_.allow_basis && (word == "e" || word == "f")) {
        long k = std::stol(std::string(digits));
        if (k >= 1) return Expr::basis(word == "f", static_cast<std::size_t>(k - 1));
      }
      pos_ = start;
    }
    fail(expectations());
  }

  std::string expectations() const {
    std::string base = "one of: rational, 'i', 'sqrt2', 't', 'sqrt(', '('";
    if (opts_.allow_basis) base += ", basis symbol";
    return base;
  }

  std::string_view s_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

bool is_int_lit(const Expr& e) { return e.kind == ExprKind::Lit && e.value.get_den() == 1; }

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string format_exponent(const Rational& q) {
  if (q.get_den() == 1 && sgn(q) >= 0) return q.get_str();
  return paren(q.get_str());
}

}  // namespace

ExprPtr expr_parse(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

std::string expr_format(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Lit: return e.value.get_str();
    case ExprKind::I: return "i";
    case ExprKind::Sqrt2: return "sqrt2";
    case ExprKind::T: return "t";
    case ExprKind::Basis: return std::string(e.odd ? "f" : "e") + std::to_string(e.index + 1);
    case ExprKind::Sqrt: return "sqrt(" + expr_format(*e.lhs) + ")";
    case ExprKind::Neg: {
      std::string inner = expr_format(*e.lhs);
      bool wrap = e.lhs->kind == ExprKind::Add || e.lhs->kind == ExprKind::Sub;
      return "-" + (wrap ? paren(inner) : inner);
    }
    case ExprKind::Pow: {
      const Expr& b = *e.lhs;
      bool simple = is_int_lit(b) || b.kind == ExprKind::I || b.kind == ExprKind::Sqrt2 ||
                    b.kind == ExprKind::T || b.kind == ExprKind::Basis || b.kind == ExprKind::Sqrt;
      std::string base = expr_format(b);
      return (simple ? base : paren(base)) + "^" + format_exponent(e.value);
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      std::string l = expr_format(*e.lhs);
      std::string r = expr_format(*e.rhs);
      ExprKind rk = e.rhs->kind;
      if (rk == ExprKind::Add || rk == ExprKind::Sub || rk == ExprKind::Neg) r = paren(r);
      return l + (e.kind == ExprKind::Add ? " + " : " - ") + r;
    }
    case ExprKind::Mul:
    case ExprKind::Div: {
      std::string l = expr_format(*e.lhs);
      std::string r = expr_format(*e.rhs);
      ExprKind lk = e.lhs->kind, rk = e.rhs->kind;
      bool lwrap = lk == ExprKind::Add || lk == ExprKind::Sub || lk == ExprKind::Neg ||
                   (e.kind == ExprKind::Div && is_int_lit(*e.lhs));
      bool rwrap = rk == ExprKind::Add || rk == ExprKind::Sub || rk == ExprKind::Neg || rk == ExprKind::Mul ||
                   rk == ExprKind::Div || (rk == ExprKind::Lit && !is_int_lit(*e.rhs));
      if (lwrap) l = paren(l);
      if (rwrap) r = paren(r);
      return l + (e.kind == ExprKind::Mul ? "*" : "/") + r;
    }
  }
  return {};
}

EvalError::EvalError(EvalFailure kind, const std::string& subexpr, const std::string& detail)
    : std::runtime_error(detail + " in '" + subexpr + "'"), kind_(kind), subexpr_(subexpr) {}

namespace {

struct Value {
  bool vector = false;
  Series scalar;
  std::vector<Series> coords;
};

class Evaluator {
 public:
  Evaluator(const Rational& cap, std::size_t m, std::size_t n, bool vectors)
      : cap_(cap), m_(m), n_(n), vectors_(vectors) {}

  Value eval(const Expr& e) {
    try {
      return eval_inner(e);
    } catch (const NotInvertible& ex) {
      throw EvalError(EvalFailure::NotInvertible, expr_format(e), ex.what());
    } catch (const NotRepresentable& ex) {
      throw EvalError(EvalFailure::NotRepresentable, expr_format(e), ex.what());
    } catch (const InsufficientPrecision& ex) {
      throw EvalError(EvalFailure::InsufficientPrecision, expr_format(e), ex.what());
    } catch (const DivisionByZero& ex) {
      throw EvalError(EvalFailure::NotInvertible, expr_format(e), ex.what());
    }
  }

 private:
  static Value scalar(Series s) { return {false, std::move(s), {}}; }

  Series need_scalar(const Value& v, const Expr& where) {
    if (v.vector) throw EvalError(EvalFailure::TypeError, expr_format(where), "basis vector used as scalar");
    return v.scalar;
  }

  Value combine(const Value& x, const Value& y, bool subtract, const Expr& where) {
    if (x.vector != y.vector) throw EvalError(EvalFailure::TypeError, expr_format(where), "scalar added to vector");
    if (!x.vector) return scalar(subtract ? x.scalar - y.scalar : x.scalar + y.scalar);
    Value r = x;
    for (std::size_t k = 0; k < r.coords.size(); ++k) {
      if (subtract) {
        r.coords[k] -= y.coords[k];
      } else {
        r.coords[k] += y.coords[k];
      }
    }
    return r;
  }

  Value scale(const Value& v, const Series& s) {
    if (!v.vector) return scalar(v.scalar * s);
    Value r = v;
    for (auto& c : r.coords) c = c * s;
    return r;
  }

  Value eval_inner(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Lit: return scalar(Series(FieldElem(e.value)));
      case ExprKind::I: return scalar(Series(FieldElem::i()));
      case ExprKind::Sqrt2: return scalar(Series(FieldElem::sqrt2()));
      case ExprKind::T: return scalar(Series::t());
      case ExprKind::Basis: {
        if (!vectors_) throw EvalError(EvalFailure::TypeError, expr_format(e), "basis symbol in scalar expression");
        std::size_t slot = e.odd ? m_ + e.index : e.index;
        if ((e.odd && e.index >= n_) || (!e.odd && e.index >= m_)) {
          throw EvalError(EvalFailure::TypeError, expr_format(e), "basis index out of range");
        }
        Value v{true, {}, std::vector<Series>(m_ + n_)};
        v.coords[slot] = Series(1);
        return v;
      }
      case ExprKind::Neg: return scale(eval(*e.lhs), Series(-1));
      case ExprKind::Add: return combine(eval(*e.lhs), eval(*e.rhs), false, e);
      case ExprKind::Sub: return combine(eval(*e.lhs), eval(*e.rhs), true, e);
      case ExprKind::Mul: {
        Value x = eval(*e.lhs), y = eval(*e.rhs);
        if (x.vector && y.vector) throw EvalError(EvalFailure::TypeError, expr_format(e), "product of two vectors");
        return x.vector ? scale(x, y.scalar) : scale(y, x.scalar);
      }
      case ExprKind::Div: {
        Value x = eval(*e.lhs);
        Series d = need_scalar(eval(*e.rhs), *e.rhs);
        Series inv;
        try {
          inv = series_inv(d, cap_);
        } catch (const NotInvertible& ex) {
          throw EvalError(EvalFailure::NotInvertible, expr_format(*e.rhs), ex.what());
        }
        return scale(x, inv);
      }
      case ExprKind::Pow: {
        Series b = need_scalar(eval(*e.lhs), *e.lhs);
        return scalar(series_pow(b, e.value, cap_));
      }
      case ExprKind::Sqrt: {
        Series b = need_scalar(eval(*e.lhs), *e.lhs);
        auto r = series_sqrt(b, cap_);
        if (!r) throw EvalError(EvalFailure::NotRepresentable, expr_format(e), "square root not in the field");
        return scalar(*r);
      }
    }
    return {};
  }

  Rational cap_;
  std::size_t m_, n_;
  bool vectors_;
};

}  // namespace

Series expr_eval(const Expr& e, const Rational& precision) {
  return Evaluator(precision, 0, 0, false).eval(e).scalar;
}

std::vector<Series> expr_eval_vector(const Expr& e, std::size_t m, std::size_t n, const Rational& precision) {
  Value v = Evaluator(precision, m, n, true).eval(e);
  if (!v.vector) throw EvalError(EvalFailure::TypeError, expr_format(e), "expected a linear combination of basis vectors");
  return v.coords;
}

}  // namespace superlie

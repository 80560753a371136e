#include "hkcones/scalar.hpp"

#include <ostream>
#include <sstream>

#include "hkcones/error.hpp"

namespace hkcones {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000UL;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) fail(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  mpz_class z(std::string(body), 10);
  return negative ? mpz_class(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

const mpz_class& common_radicand(const QuadScalar& x, const QuadScalar& y) {
  if (x.is_rational()) return y.m();
  if (y.is_rational()) return x.m();
  if (x.m() != y.m()) {
    fail(ErrorCode::IncompatibleRadicals,
         "sqrt(" + x.m().get_str() + ") and sqrt(" + y.m().get_str() + ")");
  }
  return x.m();
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text), mpz_class(1));
  const mpz_class num = parse_integer(t.substr(0, slash), text);
  const std::string_view den_text = t.substr(slash + 1);
  if (!all_digits(den_text)) fail(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

std::pair<mpz_class, mpz_class> split_square(const mpz_class& n) {
  if (n <= 0) fail(ErrorCode::ParseError, "radicand must be positive, got " + n.get_str());
  mpz_class rest = n;
  mpz_class k = 1;
  mpz_class m = 1;
  for (unsigned long d = 2; d <= kTrialDivisionBound; d += (d == 2 ? 1 : 2)) {
    if (mpz_class(d) * d > rest) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++exponent;
    }
    for (unsigned e = 0; e + 1 < exponent; e += 2) k *= d;
    if (exponent % 2 == 1) m *= d;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      k *= sqrt(rest);
    } else {
      m *= rest;
    }
  }
  return {k, m};
}

// -------------------------------------------------------------- QuadScalar

QuadScalar::QuadScalar(Rational a, Rational b, const mpz_class& m) : a_(std::move(a)), b_(std::move(b)) {
  if (b_.is_zero()) return;
  const auto [k, free] = split_square(m);
  b_ *= Rational(k, mpz_class(1));
  if (free == 1) {
    a_ += b_;
    b_ = Rational();
  } else {
    m_ = free;
  }
}

QuadScalar QuadScalar::sqrt(const Rational& r) {
  if (r.sign() < 0) fail(ErrorCode::ParseError, "square root of negative " + r.to_string());
  if (r.is_zero()) return QuadScalar();
  // sqrt(p/q) = sqrt(p q) / q
  const mpz_class p = r.numerator();
  const mpz_class q = r.denominator();
  return QuadScalar(Rational(), Rational(mpz_class(1), q), p * q);
}

const Rational& QuadScalar::as_rational() const {
  if (!is_rational()) fail(ErrorCode::IncompatibleRadicals, to_string() + " is irrational");
  return a_;
}

int QuadScalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: |a| vs |b| sqrt(m), compared through squares
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(m_, mpz_class(1));
  return lhs > rhs ? sa : sb;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar c = *this;
  c.b_ = -c.b_;
  return c;
}

Rational QuadScalar::norm() const { return a_ * a_ - b_ * b_ * Rational(m_, mpz_class(1)); }

double QuadScalar::to_double() const {
  if (is_rational()) return a_.to_double();
  mpf_class root(0, 256);
  mpf_class radicand(m_, 256);
  mpf_sqrt(root.get_mpf_t(), radicand.get_mpf_t());
  mpf_class value(a_.raw(), 256);
  mpf_class coef(b_.raw(), 256);
  value += coef * root;
  return value.get_d();
}

std::string QuadScalar::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  const Rational mag = abs(b_);
  out += b_.sign() < 0 ? "-" : (a_.is_zero() ? "" : "+");
  if (mag != Rational(1)) out += mag.to_string() + "*";
  out += "sqrt(" + m_.get_str() + ")";
  return out;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  const mpz_class m = common_radicand(*this, o);
  *this = QuadScalar(a_ + o.a_, b_ + o.b_, m);
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  const mpz_class m = common_radicand(*this, o);
  *this = QuadScalar(a_ - o.a_, b_ - o.b_, m);
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  const mpz_class m = common_radicand(*this, o);
  const Rational rm(m, mpz_class(1));
  *this = QuadScalar(a_ * o.a_ + b_ * o.b_ * rm, a_ * o.b_ + b_ * o.a_, m);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division of " + to_string() + " by zero");
  if (o.is_rational()) {
    *this = QuadScalar(a_ / o.a_, b_ / o.a_, m_);
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  *this = QuadScalar(a_ / n, b_ / n, m_);
  return *this;
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) { return compare(x, y); }

std::strong_ordering compare(const QuadScalar& x, const QuadScalar& y) {
  if (x.is_rational() && y.is_rational()) return x.a() <=> y.a();
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.to_string(); }

QuadScalar abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

std::optional<std::pair<QuadScalar, QuadScalar>> quad_roots(const Rational& a, const Rational& b,
                                                            const Rational& c) {
  if (a.is_zero()) fail(ErrorCode::DegenerateQuadratic, "leading coefficient is zero");
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return std::nullopt;
  const QuadScalar root = QuadScalar::sqrt(disc);
  const QuadScalar two_a(Rational(2) * a);
  QuadScalar lo = (QuadScalar(-b) - root) / two_a;
  QuadScalar hi = (QuadScalar(-b) + root) / two_a;
  if (compare(lo, hi) == std::strong_ordering::greater) std::swap(lo, hi);
  return std::make_pair(std::move(lo), std::move(hi));
}

QuadScalar parse_scalar(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  }
  const std::string_view t = compact;
  const auto pos = t.find("sqrt(");
  if (pos == std::string_view::npos) return QuadScalar(Rational::parse(t));
  if (t.back() != ')') fail(ErrorCode::ParseError, "unterminated sqrt in '" + std::string(text) + "'");
  const std::string_view radicand = t.substr(pos + 5, t.size() - pos - 6);
  if (!all_digits(radicand)) fail(ErrorCode::ParseError, "bad radicand in '" + std::string(text) + "'");
  std::string_view prefix = t.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.remove_suffix(1);
  std::string_view a_part;
  std::string_view b_part = prefix;
  const auto split = prefix.find_last_of("+-");
  if (split != std::string_view::npos && split > 0) {
    a_part = prefix.substr(0, split);
    b_part = prefix.substr(split);
  }
  Rational coef(1);
  if (b_part == "-") {
    coef = Rational(-1);
  } else if (!b_part.empty() && b_part != "+") {
    coef = Rational::parse(b_part);
  }
  const Rational a = a_part.empty() ? Rational() : Rational::parse(a_part);
  const mpz_class m(std::string(radicand), 10);
  if (m <= 0) fail(ErrorCode::ParseError, "radicand must be positive in '" + std::string(text) + "'");
  return QuadScalar(a, coef, m);
}

}  // namespace hkcones

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace hkcones {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" with arbitrary-size integers; no decimals.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Splits a positive integer n as k^2 * m with m square-free. Factors are found
/// by trial division; a cofactor left above the trial bound is accepted as
/// square-free unless it is a perfect square.
std::pair<mpz_class, mpz_class> split_square(const mpz_class& n);

/// a + b*sqrt(m) with a, b rational and m a positive square-free integer.
/// Canonical form: b == 0 implies m == 1, so rationals have one representation.
/// Arithmetic between two irrational values requires equal radicands.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  QuadScalar(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
  /// m must be positive; it is reduced to its square-free part.
  QuadScalar(Rational a, Rational b, const mpz_class& m);

  /// sqrt(r) for a non-negative rational r.
  static QuadScalar sqrt(const Rational& r);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const mpz_class& m() const noexcept { return m_; }

  bool is_rational() const noexcept { return b_.is_zero(); }
  /// Throws unless is_rational().
  const Rational& as_rational() const;
  int sign() const;
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

  QuadScalar conjugate() const;
  /// a^2 - m b^2, the field norm.
  Rational norm() const;
  double to_double() const;
  std::string to_string() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
  friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
  }
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

 private:
  Rational a_;
  Rational b_;
  mpz_class m_{1};
};

using Scalar = QuadScalar;

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);
QuadScalar abs(const QuadScalar& x);

/// Total order of real values; throws IncompatibleRadicals when both operands
/// are irrational over different fields.
std::strong_ordering compare(const QuadScalar& x, const QuadScalar& y);

/// Real roots of a t^2 + b t + c, ascending (a double root is returned twice).
/// Empty when the discriminant is negative; DegenerateQuadratic when a == 0.
std::optional<std::pair<QuadScalar, QuadScalar>> quad_roots(const Rational& a, const Rational& b,
                                                            const Rational& c);

/// Parses "p/q", "p/q+r/s*sqrt(m)", "r/s*sqrt(m)", "-sqrt(m)" and friends.
QuadScalar parse_scalar(std::string_view text);

}  // namespace hkcones

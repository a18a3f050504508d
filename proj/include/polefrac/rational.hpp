#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polefrac {

using Integer = mpz_class;

/// Arbitrary-precision signed rational, always kept canonical:
/// lowest terms, denominator > 0. Arithmetic is exact; there is no
/// rounding anywhere in this class. Conversion to double happens only
/// at explicit call sites.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, lets integer literals mix in
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "-p" or "p/q" (decimal-free). Throws std::invalid_argument
  /// on malformed input or zero denominator.
  static Rational from_string(std::string_view s);

  /// Exact dyadic conversion of a finite double.
  static Rational from_double(double d);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  /// Integer power; negative exponents invert (throws on zero base).
  Rational pow(long e) const;
  Rational inverse() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

/// C(n, k) with the combinatorial conventions used throughout:
/// 0 for k < 0; for n >= 0 the usual binomial (0 when k > n); for
/// negative integer n the generalized value (-1)^k C(k-n-1, k).
Integer binomial(long n, long k);

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x and integer k;
/// 0 for k < 0.
Rational binomial_general(const Rational& x, long k);

Integer int_pow(long base, unsigned long e);

/// 2^e as a rational, e may be negative.
Rational pow2(long e);

/// 2^{-2n} C(2n,n) sqrt(pi n); tends to 1 from below as n grows.
double stirling_ratio(long n);

}  // namespace polefrac

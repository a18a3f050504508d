#pragma once

#include <vector>

#include "polefrac/rational.hpp"

namespace polefrac {

/// Power series truncated at a fixed order: exact coefficients of
/// z^0 .. z^order. All operations truncate back to the common order;
/// mixing different orders is an error rather than a silent resize.
///
/// This is the brute-force oracle for every closed-form coefficient
/// formula in the project, so it stays deliberately simple: dense
/// coefficient vector, quadratic Cauchy product, reciprocal by long
/// division, power by binary exponentiation.
class TruncatedSeries {
public:
  explicit TruncatedSeries(long order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, long order);
  /// The series "z".
  static TruncatedSeries indeterminate(long order);

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& operator[](long i) const { return c_.at(static_cast<size_t>(i)); }
  Rational& at(long i) { return c_.at(static_cast<size_t>(i)); }
  const std::vector<Rational>& coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries reciprocal() const;

  TruncatedSeries scaled(const Rational& c) const;

  /// n-th power by binary exponentiation; pow(0) is the constant 1.
  TruncatedSeries pow(unsigned long n) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
  std::vector<Rational> c_;
};

}  // namespace polefrac

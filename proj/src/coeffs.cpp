#include "polefrac/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polefrac {

namespace {

Rational four_thirds_pow(long n) { return Rational(4, 3).pow(n); }

// c_{n-l}^n for 0 <= l <= n via the positive sum
//   2^{l-2n} sum_{a=l}^n C(a,l) C(2n,n+a).
// Both binomials are updated incrementally across the a-loop, so each
// step costs two small multiply/exact-divide pairs instead of a fresh
// binomial evaluation.
Rational closed_low(long n, long l) {
  Integer b1(1);                       // C(a,l), starts at a=l
  Integer b2 = binomial(2 * n, n + l); // C(2n,n+a), starts at a=l
  Integer acc(0);
  for (long a = l; a <= n; ++a) {
    acc += b1 * b2;
    // C(a+1,l) = C(a,l)(a+1)/(a+1-l); C(2n,n+a+1) = C(2n,n+a)(n-a)/(n+a+1)
    b1 *= (a + 1);
    mpz_divexact_ui(b1.get_mpz_t(), b1.get_mpz_t(), static_cast<unsigned long>(a + 1 - l));
    b2 *= (n - a);
    mpz_divexact_ui(b2.get_mpz_t(), b2.get_mpz_t(), static_cast<unsigned long>(n + a + 1));
  }
  return Rational(acc) * pow2(l - 2 * n);
}

// c_{n+l+1}^n for l >= 0 via the alternating sum
//   (-1)^l 2^{-(2n+l+1)} sum_{a=0}^l C(l,a) C(2n,n-1-a) (-1)^a.
Rational closed_high(long n, long l) {
  Integer acc(0);
  for (long a = 0; a <= l; ++a) {
    Integer term = binomial(l, a) * binomial(2 * n, n - 1 - a);
    if (a % 2 != 0) term = -term;
    acc += term;
  }
  if (l % 2 != 0) acc = -acc;
  return Rational(acc) * pow2(-(2 * n + l + 1));
}

}  // namespace

CoeffTable coeff_oracle(long n, long order) {
  if (n < 0) throw std::invalid_argument("coeff_oracle: n must be >= 0");
  if (order < n) throw std::invalid_argument("coeff_oracle: order must be >= n");
  CoeffTable t;
  t.n = n;
  t.source = CoeffTable::Source::oracle;
  if (n == 0 || order == 0) {
    t.values = TruncatedSeries::constant(Rational(1), order).coefficients();
    return t;
  }
  TruncatedSeries base =
      TruncatedSeries::indeterminate(order) +
      (TruncatedSeries::constant(Rational(2), order) + TruncatedSeries::indeterminate(order))
          .reciprocal();
  t.values = base.pow(static_cast<unsigned long>(n)).coefficients();
  return t;
}

Rational coeff_closed(long n, long i) {
  if (n < 0 || i < 0) throw std::invalid_argument("coeff_closed: negative index");
  if (i == n) return Rational(1, 2) + Rational(binomial(2 * n, n)) * pow2(-(2 * n + 1));
  if (i < n) return closed_low(n, n - i);
  return closed_high(n, i - n - 1);
}

CoeffTable coeff_closed_table(long n, long order) {
  CoeffTable t;
  t.n = n;
  t.source = CoeffTable::Source::closed;
  t.values.reserve(static_cast<size_t>(order) + 1);
  for (long i = 0; i <= order; ++i) t.values.push_back(coeff_closed(n, i));
  return t;
}

Rational tail_sum(long n) {
  if (n < 1) throw std::invalid_argument("tail_sum: n must be >= 1");
  Integer acc(0);
  Integer b(1);   // C(2n, b), starts at b=0
  Integer p3(1);  // 3^b
  for (long b_idx = 0; b_idx < n; ++b_idx) {
    acc += b * p3;
    b *= (2 * n - b_idx);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(b_idx + 1));
    p3 *= 3;
  }
  Integer den = int_pow(2, 2 * static_cast<unsigned long>(n)) * int_pow(3, static_cast<unsigned long>(n));
  return Rational(acc, den);
}

Rational head_sum(long n) {
  if (n < 0) throw std::invalid_argument("head_sum: n must be >= 0");
  Rational acc(0);
  for (long i = 0; i < n; ++i) acc += coeff_closed(n, i);
  return acc;
}

Rational head_sum_fast(long n) {
  if (n < 0) throw std::invalid_argument("head_sum_fast: n must be >= 0");
  Integer acc(0);
  Integer b = binomial(2 * n, n + 1);  // C(2n, n+a) at a=1
  Integer p3(3);                       // 3^a
  for (long a = 1; a <= n; ++a) {
    acc += b * (p3 - 1);
    b *= (n - a);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n + a + 1));
    p3 *= 3;
  }
  return Rational(acc, int_pow(2, 2 * static_cast<unsigned long>(n)));
}

bool four_thirds_identity_check(long n) {
  if (n < 1) throw std::invalid_argument("four_thirds_identity_check: n must be >= 1");
  return head_sum(n) + coeff_closed(n, n) + tail_sum(n) == four_thirds_pow(n);
}

bool alternating_convolution_check(long n, long a) {
  if (n < 0) throw std::invalid_argument("alternating_convolution_check: n must be >= 0");
  Rational lhs = Rational(binomial(2 * n, n + a)) * pow2(-2 * n);
  if (a % 2 != 0) lhs = -lhs;
  Rational rhs(0);
  for (long b = 0; b <= n; ++b) {
    Rational term =
        Rational(Integer(binomial(n, b) * binomial(2 * b, b + a))) * pow2(-2 * b);
    rhs += (b % 2 != 0) ? -term : term;
  }
  return lhs == rhs;
}

bool vandermonde_upper_check(long b, long l) {
  if (b < 0 || l < 0) throw std::invalid_argument("vandermonde_upper_check: b, l must be >= 0");
  Integer lhs = binomial(2 * b + l, b + l + 1);
  Integer rhs(0);
  for (long a = 0; a <= l; ++a) rhs += binomial(l, a) * binomial(2 * b, b + a + 1);
  return lhs == rhs;
}

bool vandermonde_lower_check(long b, long l) {
  if (b < 0 || l <= 0) throw std::invalid_argument("vandermonde_lower_check: need b >= 0, l > 0");
  Integer lhs = binomial(2 * b - l, b - l + 1);
  Integer rhs(0);
  for (long a = l; a <= b + 1; ++a) rhs += binomial(-l, a - l) * binomial(2 * b, b - a + 1);
  return lhs == rhs;
}

bool vandermonde_check(long b, long l) {
  return l >= 0 ? vandermonde_upper_check(b, l) : vandermonde_lower_check(b, -l);
}

namespace {

Rational convolution_rhs(long n, long l) {
  Rational rhs(0);
  for (long b = 0; b <= n; ++b) {
    Rational term = Rational(binomial(n, b)) *
                    Rational(binomial(2 * b + l, b + l + 1)) * pow2(-(2 * b + l + 1));
    rhs += ((b + l + 1) % 2 != 0) ? -term : term;
  }
  return rhs;
}

}  // namespace

bool convolution_formula_check(long n, long l) {
  if (n < 0 || n + l + 1 < 0) throw std::invalid_argument("convolution_formula_check: index out of range");
  const long idx = n + l + 1;
  CoeffTable oracle = coeff_oracle(n, std::max(n, idx));
  return convolution_rhs(n, l) == oracle.values[static_cast<size_t>(idx)];
}

bool convolution_formula_check(const CoeffTable& oracle, long l) {
  const long idx = oracle.n + l + 1;
  if (idx < 0 || idx > oracle.order())
    throw std::invalid_argument("convolution_formula_check: index outside oracle table");
  return convolution_rhs(oracle.n, l) == oracle.values[static_cast<size_t>(idx)];
}

TailRatio tail_ratio(long n, bool full) {
  if (n < 1) throw std::invalid_argument("tail_ratio: n must be >= 1");
  TailRatio r;
  // term_0 = 1, term_{t+1} = term_t (n-1-t)/(3(n+2+t)); zero from t = n on.
  const Rational cutoff(Integer(1), int_pow(10, 24));
  Rational term(1);
  Rational acc(0);
  long t = 0;
  while (!term.is_zero()) {
    acc += term;
    ++t;
    term *= Rational(n - t) / Rational(3 * (n + 1 + t));
    if (!full && term <= cutoff * Rational(2)) break;
  }
  r.partial = acc;
  r.remainder_bound = term / Rational(2) * Rational(3);  // sum of a ratio-1/3 geometric tail from `term`
  r.terms_used = t;
  r.le_three_halves = (r.partial + r.remainder_bound <= Rational(3, 2));
  return r;
}

AsymptoticsReport asymptotics_report(long n) {
  if (n < 1) throw std::invalid_argument("asymptotics_report: n must be >= 1");
  AsymptoticsReport rep;
  rep.n = n;
  const double root = std::sqrt(M_PI * static_cast<double>(n));
  rep.cnn_gap_ratio = (coeff_closed(n, n) - Rational(1, 2)).to_double() * 2.0 * root;
  rep.t_ratio = tail_sum(n).to_double() * 2.0 * root;
  rep.s_gap_ratio = (four_thirds_pow(n) - Rational(1, 2) - head_sum_fast(n)).to_double() * root;
  rep.tail = tail_ratio(n);
  rep.r_n = rep.tail.partial.to_double();
  return rep;
}

}  // namespace polefrac

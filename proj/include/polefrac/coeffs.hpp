#pragma once

#include <vector>

#include "polefrac/rational.hpp"
#include "polefrac/series.hpp"

namespace polefrac {

/// Everything in this header is about the Taylor coefficients c_i^n of
/// (z + 1/(z+2))^n around z = 0: a brute-force series oracle, closed
/// forms for every index regime, the head/tail sums with the exact
/// telescoping identity sum_i c_i^n = (4/3)^n, and the asymptotic
/// ratios that certify the sqrt(pi n) growth rates.

struct CoeffTable {
  enum class Source { oracle, closed };
  long n = 0;
  std::vector<Rational> values;  // index i -> c_i^n, i = 0..order
  Source source = Source::oracle;

  long order() const { return static_cast<long>(values.size()) - 1; }
};

/// Brute force: expand (z + 1/(z+2))^n as a truncated series.
/// Requires order >= n.
CoeffTable coeff_oracle(long n, long order);

/// Closed form for c_i^n, valid for every i >= 0:
///   i < n:  c_{n-l}^n = 2^{l-2n} sum_{a=l}^n C(a,l) C(2n,n+a)   (l = n-i)
///   i = n:  c_n^n = 1/2 + 2^{-(2n+1)} C(2n,n)
///   i > n:  c_{n+l+1}^n = (-1)^l 2^{-(2n+l+1)}
///             * sum_{a=0}^l C(l,a) C(2n,n-1-a) (-1)^a             (l = i-n-1)
Rational coeff_closed(long n, long i);

/// Closed-form table c_0^n .. c_order^n.
CoeffTable coeff_closed_table(long n, long order);

/// T_n = sum_{i>n} c_i^n = sum_{b=0}^{n-1} C(2n,b) 3^{b-n} / 4^n, n >= 1.
Rational tail_sum(long n);

/// S_n = sum_{i<n} c_i^n, summed literally from coeff_closed.
Rational head_sum(long n);

/// Same value through the collapsed single sum
/// 2^{-2n} sum_{a=1}^n C(2n,n+a) (3^a - 1); used for long sweeps.
Rational head_sum_fast(long n);

/// S_n + c_n^n + T_n == (4/3)^n, exactly.
bool four_thirds_identity_check(long n);

/// 2^{-2n} C(2n,n+a) (-1)^a == sum_{b=0}^n C(n,b) C(2b,b+a) 2^{-2b} (-1)^b
/// for any integer a.
bool alternating_convolution_check(long n, long a);

/// C(2b+l, b+l+1) == sum_{a=0}^l C(l,a) C(2b, b+a+1), l >= 0.
bool vandermonde_upper_check(long b, long l);

/// C(2b-l, b-l+1) == sum_{a=l}^{b+1} C(-l, a-l) C(2b, b-a+1), l > 0,
/// with generalized binomials for the negative upper argument.
bool vandermonde_lower_check(long b, long l);

/// Dispatches on the sign of l: upper identity for l >= 0, lower for l < 0
/// (with |l|).
bool vandermonde_check(long b, long l);

/// c_{n+l+1}^n == sum_{b=0}^n C(n,b) C(2b+l, b+l+1) (-1)^{b+l+1} 2^{-2b-l-1},
/// checked against the series oracle at index n+l+1. Valid for any l with
/// n+l+1 >= 0.
bool convolution_formula_check(long n, long l);
bool convolution_formula_check(const CoeffTable& oracle, long l);

struct TailRatio {
  Rational partial;          // exact partial sum of the ratio series
  Rational remainder_bound;  // exact geometric bound on the dropped tail
  bool le_three_halves;      // partial + remainder <= 3/2, proven exactly
  long terms_used;
};

/// R_n in T_n = C(2n,n-1)/(3 4^n) * R_n, i.e.
/// R_n = sum_{t>=0} 3^{-t} prod_{u=1}^t (n-u)/(n+1+u).
/// Terms vanish for t >= n; each term is at most 1/3 of the previous one,
/// so the dropped tail after term t is bounded by term_t / 2. With
/// full=true all nonzero terms are summed and the remainder bound is 0.
TailRatio tail_ratio(long n, bool full = false);

struct AsymptoticsReport {
  long n = 0;
  double cnn_gap_ratio = 0;  // (c_n^n - 1/2) * 2 sqrt(pi n)   -> 1
  double t_ratio = 0;        // T_n * 2 sqrt(pi n)              -> 1
  double s_gap_ratio = 0;    // ((4/3)^n - 1/2 - S_n) sqrt(pi n)-> 1
  double r_n = 0;            // partial sum of the ratio series -> 3/2
  TailRatio tail;            // exact partial sum + remainder bound
};

/// All gap ratios computed from exact rational differences, converted to
/// double only at the very end (the raw quantities overflow doubles long
/// before the windows of interest).
AsymptoticsReport asymptotics_report(long n);

}  // namespace polefrac

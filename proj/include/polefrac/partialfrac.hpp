#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "polefrac/rational.hpp"

namespace polefrac {

/// Exact partial-fraction data for 1/((1-z)^m (1+z)^n):
///   a[j-1] multiplies (1-z)^{-j},  b[i-1] multiplies (1+z)^{-i}.
/// All weights are positive dyadic rationals and sum to 1.
struct PMExpansion {
  long m = 0, n = 0;
  std::vector<Rational> a, b;

  Rational weight_total() const;
};

/// Closed form: a_{m-k} = 2^{-(n+k)} C(n+k-1,k), b_{n-i} = 2^{-(m+i)} C(m+i-1,i).
PMExpansion decomp_pm(long m, long n);

/// Exact recombination at a rational sample z != +-1.
bool pm_recombine_check(const PMExpansion& e, const Rational& z);

/// Exact expansion of z^{2k}/(1-z^2)^k as
///   constant + sum_j alphas[j-1] ((1-z)^{-j} + (1+z)^{-j}),
/// constant = (-1)^k, obtained by expanding z^{2k} = ((z^2-1)+1)^k and
/// feeding each (1-z^2)^{j-k} term through decomp_pm.
struct AlphaExpansion {
  long k = 0;
  Rational constant;
  std::vector<Rational> alphas;  // alphas[j-1] for j = 1..k

  /// 1 + 2 sum_j |alpha_j|.
  Rational weight_sum() const;
  /// weight_sum() <= 2^k, exactly.
  bool coarse_bound_holds() const;
  /// weight_sum() <= 2 (4/3)^k, exactly.
  bool improved_bound_holds() const;
};

AlphaExpansion decomp_alphas(long k);

/// alpha_{k-j} == (-1)^j c_j^k against the closed-form coefficients,
/// including the sign pattern (-1)^j alpha_{k-j} > 0, for j = 0..k-1.
bool alpha_vs_c_check(long k);

/// Independent route: both sides of the alpha expansion as truncated
/// series around z = 0, compared exactly.
bool alpha_series_check(long k);

/// Element q * w^p of the quadratic extension generated by w = i/sqrt(C);
/// powers stay symbolic so that absolute values and recombination can be
/// handled exactly (w^2 = -1/C is rational).
struct FieldElem {
  Rational q;
  long p = 0;
};

/// Exact expansion of z^{2k}/(1+Cz^2)^k as
///   1/C^k + sum_v [ A_v/(z-z_C)^v + B_v/(z+z_C)^v ],  z_C = i/sqrt(C),
/// with A_v = (-1)^v alpha_v z_C^{2k+v} and B_v = alpha_v z_C^{2k+v}
/// (the (-1)^v comes from rewriting (1-xi)^{-v} as (-1)^v (xi-1)^{-v}
/// after the substitution z = z_C xi).
struct QuadPoleExpansion {
  long k = 0;
  Rational C, delta;
  Rational constant;  // 1/C^k
  std::vector<FieldElem> A, B;

  std::complex<double> render(const FieldElem& e) const;
  std::complex<double> pole() const;  // z_C as a complex double

  /// 1/C^k + sum_v (|A_v| + |B_v|) <= 2^k delta^{-3k/2}, decided exactly by
  /// splitting both sides over the basis {1, C^{-1/2}} resp. {1, delta^{-1/2}}
  /// and comparing squares (no irrational arithmetic).
  bool coefficient_bound_holds() const;
};

/// Requires 0 < delta < 1 and delta < C < 1/delta.
QuadPoleExpansion decomp_quad_pole(long k, const Rational& C, const Rational& delta);

/// Max |LHS - RHS| over random real samples z in [-10, 10].
double quad_pole_recombine_numeric(const QuadPoleExpansion& e, int samples, uint64_t seed);

/// Recombines the expansion over the common denominator (z^2 + 1/C)^k in
/// the extension field Q[w]/(w^2 + 1/C) and checks the numerator equals
/// z^{2k}/C^k exactly.
bool quad_pole_symbolic_check(const QuadPoleExpansion& e);

}  // namespace polefrac

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polefrac/quadform.hpp"
#include "polefrac/rational.hpp"

namespace polefrac {

/// Monic monomial x_1^{e_1} ... x_d^{e_d}.
struct Monomial {
  std::vector<long> exponents;

  long dim() const { return static_cast<long>(exponents.size()); }
  long degree() const;
  Rational eval(const std::vector<Rational>& x) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// 1 + x'Cx.
Rational h_eval(const SymMatrix& C, const std::vector<Rational>& x);

/// One function of the family P(x) / prod_s (1 + x'C_s x), carrying the
/// spectral window parameter delta it claims membership in. Construction
/// enforces deg P = 2r (r = number of denominator factors) and matching
/// dimensions; window membership itself is queried via in_class.
class ClassTerm {
public:
  ClassTerm(Monomial P, std::vector<SymMatrix> denoms, Rational delta);

  const Monomial& numerator() const { return p_; }
  const std::vector<SymMatrix>& denominators() const { return denoms_; }
  const Rational& delta() const { return delta_; }
  long order() const { return static_cast<long>(denoms_.size()); }  // r
  long dim() const { return p_.dim(); }

  Rational eval(const std::vector<Rational>& x) const;
  long distinct_denominators() const;

  /// All denominators in the delta-window and at most j distinct ones.
  bool in_class(long j) const;
  /// Empty string when in_class(j) holds, otherwise the reason.
  std::string class_failure(long j) const;

  friend bool operator==(const ClassTerm&, const ClassTerm&) = default;

private:
  Monomial p_;
  std::vector<SymMatrix> denoms_;
  Rational delta_;
};

inline bool class_check(const ClassTerm& f, long j) { return f.in_class(j); }

struct ComboTerm {
  Rational lambda;
  ClassTerm term;

  friend bool operator==(const ComboTerm&, const ComboTerm&) = default;
};

/// Finite linear combination sum_s lambda_s f_s with exact coefficients.
struct Combo {
  std::vector<ComboTerm> terms;

  long dim() const;
  Rational eval(const std::vector<Rational>& x) const;

  friend bool operator==(const Combo&, const Combo&) = default;
};

/// Sampling plan for empirical sup norms: a coordinate box grid for
/// d <= 2, random box samples for d >= 3, always augmented with the
/// diagonal rays (M,...,M) whose h-denominators dominate everything else.
struct GridSpec {
  Rational box{10};
  long resolution = 41;       // points per axis when d <= 2
  long random_samples = 200;  // box samples when d >= 3
  std::uint64_t seed = 20240801;
  std::vector<long> ray_magnitudes{1, 10, 100, 1000};
};

struct SupBounds {
  double empirical_sup = 0;
  Rational upper;  // delta^{-r}
  Rational lower;  // (delta/d)^r
};

/// Exact evaluation on the sampling plan (converted to double only for
/// the max), together with the a-priori window bounds
/// (delta/d)^r <= sup |f| <= delta^{-r}.
SupBounds sup_bounds(const ClassTerm& f, const GridSpec& grid = {});

double empirical_sup(const Combo& f, const GridSpec& grid = {});

/// The exact finite-difference decomposition of g - f for f = P/h_C^r,
/// g = P/h_D^r:
///   g - f = - sum_{k<=l} sum_{j=0}^{r-1} (D_kl - C_kl)(2 - delta_kl)
///             x_k x_l P(x) h_C^{j-r} h_D^{-j-1},
/// returned as a combo of r d(d+1)/2 terms (zero coefficients kept).
/// Every term has r+1 denominator factors drawn from {C, D}.
/// Indices k, l are 0-based. Requires C, D in the delta-window.
Combo difference_decompose(const Monomial& P, const SymMatrix& C, const SymMatrix& D, long r,
                           const Rational& delta);

/// Derivative of phi(C,x) = P(x) h_C(x)^{-r} with respect to C_kl (0-based,
/// k <= l; the perturbation adds h to both C_kl and C_lk):
///   d phi / d C_kl = -r (2 - delta_kl) x_k x_l P(x) / h_C^{r+1},
/// returned as (coefficient, term).
std::pair<Rational, ClassTerm> partial_derivative_term(const Monomial& P, const SymMatrix& C,
                                                       long r, long k, long l,
                                                       const Rational& delta);

struct DiffCheck {
  double analytic = 0;
  double numeric = 0;
  double rel_err = 0;  // |analytic - numeric| / max(1, |analytic|)
};

/// Central difference in exact arithmetic: h is converted to its exact
/// dyadic rational, both phi evaluations and their difference quotient are
/// computed exactly, and only the final quantities are rounded to double.
/// Requires the two perturbed matrices to stay inside the delta-window.
DiffCheck finite_diff_check(const Monomial& P, const SymMatrix& C, long r, long k, long l,
                            const std::vector<Rational>& x, double h, const Rational& delta);

/// sum_s |lambda_s| after verifying every term lies in the class: at most
/// r denominator factors, all inside the delta-window, at most j distinct.
/// Throws naming the first offending term otherwise.
Rational norm_certificate(const Combo& f, const Rational& delta, long r, long j);

/// Exact two-term split of x^4 / ((1+a x^2)(1+x^2/a)) as
///   a/(1-a^2) [ x^2/(1+a x^2) - x^2/(1+x^2/a) ],
/// a combo whose certificate is 2a/(1-a^2). Requires 0 < delta < a < 1.
Combo two_term_split(const Rational& alpha, const Rational& delta);

/// Number of monic monomials of degree 2r in d variables: C(2r+d-1, d-1).
Integer monomial_count(long r, long d);

/// All monomials of the given total degree, lexicographic in exponents.
std::vector<Monomial> monomials_of_degree(long degree, long d);

}  // namespace polefrac

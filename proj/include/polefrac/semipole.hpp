#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "polefrac/ratfun.hpp"

namespace polefrac {

using Complex = std::complex<double>;

/// Raised when a pole-coefficient recovery cannot be set up (for example
/// no generic ray can be found); distinct from parameter errors so the
/// CLI can map it to a check failure rather than a usage error.
class recovery_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleTerm {
  Complex a;
  Complex z0;
  long k = 1;
};

/// Finite sum of complex pole terms a_s / (z - z_s)^{k_s}.
struct MeromorphicSum {
  std::vector<PoleTerm> terms;

  /// Throws std::domain_error within 1e-12 of a pole.
  Complex eval(Complex z) const;
  std::function<Complex(Complex)> fn() const;
};

struct LimitEstimate {
  Complex value;
  double error_bar = 0;
  bool reliable = false;  // error_bar <= 1e-4
};

/// t_j = 2^{-j} for j = j_lo..j_hi (strictly decreasing).
std::vector<double> geometric_schedule(int j_lo, int j_hi);

/// lim_{t -> 0+} t^r f(iy + t) by Richardson extrapolation: polynomial
/// extrapolation to t = 0 over the geometric schedule, returning the
/// table entry whose successive diagonal difference is smallest (that
/// difference is the reported error bar). Requires a strictly decreasing
/// positive schedule of length >= 4. Evaluation failures propagate.
LimitEstimate semipole_limit(const std::function<Complex(Complex)>& f, double y, long r,
                             const std::vector<double>& schedule);

struct RecoveredCoefficients {
  /// coeffs[0] is the order-max_order coefficient, down to order 1 last.
  std::vector<Complex> coeffs;
  std::vector<double> error_bars;
  bool all_reliable = false;
};

/// Successive subtraction: recovers the top-order coefficient at iy first,
/// subtracts c/(z-iy)^order from the black box, and recurses downward.
/// Lower orders use a shorter schedule (t >= 2^-14) so that the error of an
/// already-subtracted estimate, amplified by 1/t, stays below the noise
/// floor of the next extrapolation.
RecoveredCoefficients recover_coefficients(std::function<Complex(Complex)> f, double y,
                                           long max_order);

/// The combo restricted to the ray x = t alpha: each term becomes
/// lambda P(alpha) t^{2r} / prod_v (1 + t^2 alpha'C_v alpha), which this
/// struct stores by its exact scalars.
struct RaySliceTerm {
  Rational lambda;
  Rational p_alpha;          // P(alpha)
  std::vector<Rational> qs;  // alpha'C_v alpha per denominator factor
};

struct RaySlice {
  std::vector<Rational> alpha;
  std::vector<RaySliceTerm> terms;

  Rational eval(const Rational& t) const;
  Complex eval(Complex t) const;
  std::function<Complex(Complex)> fn() const;
};

/// Requires alpha in the cube [1,2]^d.
RaySlice ray_restrict(const Combo& f, const std::vector<Rational>& alpha);

/// True iff the pairwise-distinct denominator matrices of the combo give
/// pairwise-distinct alpha'C alpha (exact comparison) and every numerator
/// P_s(alpha) is nonzero.
bool genericity_check(const std::vector<Rational>& alpha, const Combo& f);

/// Rational direction from a fine grid in [1,2]^d, deterministic per seed.
std::vector<Rational> random_direction(long d, std::uint64_t seed);
std::vector<Rational> random_direction(long d, std::mt19937_64& eng);

/// The exact three-term relation
///   2/((1+x^2)(1+3x^2)) - 1/((1+x^2)(1+2x^2)) = 1/((1+2x^2)(1+3x^2)),
/// verified by clearing denominators and comparing polynomials
/// coefficientwise. It shows a two-denominator combo admitting a second
/// representation whose coefficient sum is smaller, so naive coefficient
/// sums are only upper bounds on the combination norm.
bool verify_counterexample();

struct WitnessResult {
  std::vector<Rational> alpha;
  Rational q_c, q_d;  // alpha'C alpha, alpha'D alpha
  Complex c_at_C, c_at_D;
  double err_c = 0, err_d = 0;

  /// Both top coefficients nonzero and their ratio a negative real
  /// (up to 1e-3 relative imaginary part): the finite-scale witness of
  /// the +1/-1 coefficients of P/h_C^r - P/h_D^r.
  bool opposite_signs() const;
};

/// Slices f = P/h_C^r - P/h_D^r along a generic ray and recovers the
/// top-order semipole coefficients at iy = 1/sqrt(alpha'C alpha) and
/// 1/sqrt(alpha'D alpha). Tries up to 50 rays (preferring well-separated
/// quadratic forms); throws recovery_error if none is generic.
WitnessResult norm_two_witness(const Monomial& P, const SymMatrix& C, const SymMatrix& D, long r,
                               const Rational& delta, std::uint64_t seed);

/// Closed form for the top-order coefficient of one sliced term at its own
/// pole: lambda P(alpha) (i/2)^r q^{-3r/2}; the oracle the witness numbers
/// are tested against.
Complex witness_expected_top(const Rational& lambda, const Rational& p_alpha, const Rational& q,
                             long r);

}  // namespace polefrac

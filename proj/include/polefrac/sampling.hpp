#pragma once

#include <random>
#include <vector>

#include "polefrac/ratfun.hpp"
#include "polefrac/semipole.hpp"

namespace polefrac {
namespace sampling {

// Uniform draw from a rational grid of `grid` steps spanning [lo, hi].
Rational random_rational(std::mt19937_64& eng, const Rational& lo,
                         const Rational& hi, long grid = 4096);

std::vector<Rational> random_point(std::mt19937_64& eng, long d,
                                   const Rational& lo, const Rational& hi,
                                   long grid = 4096);

// Random symmetric matrix with all eigenvalues strictly inside
// (delta, 1/delta), built as Q * Lambda * Q^T with an exact rational
// orthogonal Q from the Cayley transform of a skew matrix.  Eigenvalues
// keep a 2% margin from the window edges so small perturbations stay
// inside.
SymMatrix random_window_matrix(std::mt19937_64& eng, long d,
                               const Rational& delta);

Monomial random_monomial(std::mt19937_64& eng, long degree, long d);

// Random class member x^P / prod h_s with deg P = 2r and denominators
// drawn from a pool of at most max_distinct window matrices.
ClassTerm random_class_term(std::mt19937_64& eng, long d, long r,
                            const Rational& delta, long max_distinct = 2);

// A meromorphic sum together with the ground truth at one marked pole on
// the positive imaginary axis.  truth[0] is the coefficient of the top
// order at i*y, truth.back() the simple-pole coefficient.  Background
// poles keep distance >= 0.1 from the marked one.
struct SampledPole {
  MeromorphicSum sum;
  double y = 1.0;
  long order = 1;
  std::vector<Complex> truth;
};

SampledPole random_meromorphic_sum(std::mt19937_64& eng);

}  // namespace sampling
}  // namespace polefrac

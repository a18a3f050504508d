#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "polefrac/sampling.hpp"
#include "polefrac/semipole.hpp"

using polefrac::Complex;
using polefrac::MeromorphicSum;
using polefrac::Monomial;
using polefrac::PoleTerm;
using polefrac::Rational;
using polefrac::SymMatrix;

TEST_CASE("meromorphic sum evaluation") {
  MeromorphicSum f{{PoleTerm{Complex(1, 0), Complex(0, 1), 1}}};
  // 1/(z - i) at z = 2i -> 1/i = -i
  Complex v = f.eval(Complex(0, 2));
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(-1.0));
  CHECK_THROWS_AS(f.eval(Complex(0, 1.0 + 1e-14)), std::domain_error);

  MeromorphicSum two{{PoleTerm{Complex(1, 0), Complex(0, 1), 2},
                      PoleTerm{Complex(3, 0), Complex(0, 1), 1}}};
  // at z = 1+i: 1/1 + 3/1 = 4
  Complex w = two.eval(Complex(1, 1));
  CHECK(w.real() == doctest::Approx(4.0));
  CHECK(w.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("geometric schedule") {
  auto s = polefrac::geometric_schedule(4, 8);
  REQUIRE(s.size() == 5);
  CHECK(s[0] == doctest::Approx(1.0 / 16));
  CHECK(s[4] == doctest::Approx(1.0 / 256));
  CHECK_THROWS_AS(polefrac::geometric_schedule(8, 4), std::invalid_argument);
}

TEST_CASE("semipole limit on a pure pole") {
  MeromorphicSum f{{PoleTerm{Complex(5, 0), Complex(0, 1), 3}}};
  auto est = polefrac::semipole_limit(f.fn(), 1.0, 3,
                                      polefrac::geometric_schedule(4, 20));
  CHECK(std::abs(est.value - Complex(5, 0)) < 1e-10);
  CHECK(est.reliable);
}

TEST_CASE("semipole limit with a lower-order term and a neighbor") {
  MeromorphicSum f{{PoleTerm{Complex(1, 0), Complex(0, 1), 2},
                    PoleTerm{Complex(1, 0), Complex(0, 2), 1}}};
  auto est = polefrac::semipole_limit(f.fn(), 1.0, 2,
                                      polefrac::geometric_schedule(4, 20));
  CHECK(std::abs(est.value - Complex(1, 0)) < 1e-8);
}

TEST_CASE("semipole limit is zero when there is no pole") {
  MeromorphicSum f{{PoleTerm{Complex(1, 0), Complex(0, 2), 1}}};
  auto est = polefrac::semipole_limit(f.fn(), 1.0, 1,
                                      polefrac::geometric_schedule(4, 20));
  CHECK(std::abs(est.value) < 1e-8);
}

TEST_CASE("schedule validation") {
  MeromorphicSum f{{PoleTerm{Complex(1, 0), Complex(0, 1), 1}}};
  CHECK_THROWS_AS(polefrac::semipole_limit(f.fn(), 1.0, 1, {0.1, 0.01}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      polefrac::semipole_limit(f.fn(), 1.0, 1, {0.1, 0.2, 0.05, 0.01}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      polefrac::semipole_limit(f.fn(), 1.0, 1, {0.1, 0.05, -0.01, 0.001}),
      std::invalid_argument);
}

TEST_CASE("successive subtraction recovers stacked coefficients") {
  MeromorphicSum f{{PoleTerm{Complex(1, 0), Complex(0, 1), 2},
                    PoleTerm{Complex(3, 0), Complex(0, 1), 1}}};
  auto rec = polefrac::recover_coefficients(f.fn(), 1.0, 2);
  REQUIRE(rec.coeffs.size() == 2);
  CHECK(std::abs(rec.coeffs[0] - Complex(1, 0)) < 1e-6);
  CHECK(std::abs(rec.coeffs[1] - Complex(3, 0)) < 1e-6);
  CHECK(rec.all_reliable);
}

TEST_CASE("zero middle coefficient is recovered as zero") {
  MeromorphicSum f{{PoleTerm{Complex(1, 0), Complex(0, 1), 3},
                    PoleTerm{Complex(2, 0), Complex(0, 1), 1}}};
  auto rec = polefrac::recover_coefficients(f.fn(), 1.0, 3);
  REQUIRE(rec.coeffs.size() == 3);
  CHECK(std::abs(rec.coeffs[0] - Complex(1, 0)) < 1e-6);
  CHECK(std::abs(rec.coeffs[1]) < 1e-6);
  CHECK(std::abs(rec.coeffs[2] - Complex(2, 0)) < 1e-6);
}

TEST_CASE("random sums are recovered to relative 1e-5") {
  std::mt19937_64 eng(1729);
  for (int trial = 0; trial < 30; ++trial) {
    polefrac::sampling::SampledPole sp =
        polefrac::sampling::random_meromorphic_sum(eng);
    auto rec = polefrac::recover_coefficients(sp.sum.fn(), sp.y, sp.order);
    REQUIRE(rec.coeffs.size() == sp.truth.size());
    for (size_t i = 0; i < sp.truth.size(); ++i) {
      double rel = std::abs(rec.coeffs[i] - sp.truth[i]) /
                   std::max(1e-12, std::abs(sp.truth[i]));
      CHECK(rel < 1e-5);
    }
  }
}

TEST_CASE("ray restriction commutes with evaluation") {
  std::mt19937_64 eng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    long d = 1 + trial % 3;
    Rational delta(1, 2);
    long r = 1 + trial % 2;
    Monomial P = polefrac::sampling::random_monomial(eng, 2 * r, d);
    SymMatrix C = polefrac::sampling::random_window_matrix(eng, d, delta);
    SymMatrix D = polefrac::sampling::random_window_matrix(eng, d, delta);
    polefrac::Combo combo =
        polefrac::difference_decompose(P, C, D, r, delta);
    std::vector<Rational> alpha = polefrac::random_direction(d, 17 + trial);
    polefrac::RaySlice slice = polefrac::ray_restrict(combo, alpha);
    for (int s = 0; s < 10; ++s) {
      Rational t = polefrac::sampling::random_rational(eng, Rational(-2),
                                                       Rational(2), 256);
      std::vector<Rational> x;
      for (const auto& a : alpha) x.push_back(t * a);
      CHECK(slice.eval(t) == combo.eval(x));
    }
  }
}

TEST_CASE("ray restriction validates the direction") {
  polefrac::Combo combo = polefrac::difference_decompose(
      Monomial{{2}}, SymMatrix::identity(1),
      SymMatrix::diagonal({Rational(3, 2)}), 1, Rational(1, 2));
  CHECK_THROWS_AS(polefrac::ray_restrict(combo, {Rational(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(polefrac::ray_restrict(combo, {Rational(1), Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("genericity of directions") {
  Monomial P{{1, 1}};
  SymMatrix C = SymMatrix::diagonal({Rational(1), Rational(2)});
  SymMatrix D = SymMatrix::diagonal({Rational(2), Rational(1)});
  polefrac::Combo combo =
      polefrac::difference_decompose(P, C, D, 1, Rational(1, 3));
  // the diagonal direction sees q_C = q_D = 3: degenerate
  CHECK_FALSE(
      polefrac::genericity_check({Rational(1), Rational(1)}, combo));
  // a tilted one separates them
  CHECK(polefrac::genericity_check({Rational(1), Rational(3, 2)}, combo));
  // random directions are almost always generic
  int generic = 0;
  for (int s = 0; s < 100; ++s)
    if (polefrac::genericity_check(polefrac::random_direction(2, 1000 + s),
                                   combo))
      ++generic;
  CHECK(generic >= 95);
}

TEST_CASE("three-term relation holds exactly") {
  CHECK(polefrac::verify_counterexample());
}

TEST_CASE("witness on the one-dimensional pair") {
  // f = x^2/(1+x^2) - x^2/(1+2x^2): poles of the slice at i and i/sqrt(2)
  polefrac::WitnessResult w = polefrac::norm_two_witness(
      Monomial{{2}}, SymMatrix::identity(1),
      SymMatrix::diagonal({Rational(2)}), 1, Rational(2, 5), 4242);
  CHECK(w.opposite_signs());
  // alpha in [1,2], q_C = alpha^2, q_D = 2 alpha^2
  CHECK(w.q_d == Rational(2) * w.q_c);
  Rational p_alpha = Monomial{{2}}.eval(w.alpha);
  Complex want_c =
      polefrac::witness_expected_top(Rational(1), p_alpha, w.q_c, 1);
  Complex want_d =
      polefrac::witness_expected_top(Rational(-1), p_alpha, w.q_d, 1);
  CHECK(std::abs(w.c_at_C - want_c) < 1e-6 * std::abs(want_c));
  CHECK(std::abs(w.c_at_D - want_d) < 1e-6 * std::abs(want_d));
}

TEST_CASE("witness expected top closed form") {
  // lambda=1, P(alpha)=1, q=1, r=1: (i/2)
  Complex v = polefrac::witness_expected_top(Rational(1), Rational(1),
                                             Rational(1), 1);
  CHECK(v.real() == doctest::Approx(0.0));
  CHECK(v.imag() == doctest::Approx(0.5));
  // r=2: (i/2)^2 = -1/4
  Complex v2 = polefrac::witness_expected_top(Rational(1), Rational(1),
                                              Rational(1), 2);
  CHECK(v2.real() == doctest::Approx(-0.25));
  CHECK(v2.imag() == doctest::Approx(0.0));
}

TEST_CASE("witnesses on random multivariate pairs") {
  std::mt19937_64 eng(90210);
  for (int trial = 0; trial < 6; ++trial) {
    long d = 1 + trial % 3;
    long r = 1 + trial % 2;
    Rational delta(1, 2);
    Monomial P = polefrac::sampling::random_monomial(eng, 2 * r, d);
    SymMatrix C = polefrac::sampling::random_window_matrix(eng, d, delta);
    SymMatrix D = polefrac::sampling::random_window_matrix(eng, d, delta);
    while (D == C) D = polefrac::sampling::random_window_matrix(eng, d, delta);
    polefrac::WitnessResult w =
        polefrac::norm_two_witness(P, C, D, r, delta, 7000 + trial);
    CHECK(w.opposite_signs());
    Rational p_alpha = P.eval(w.alpha);
    Complex want_c =
        polefrac::witness_expected_top(Rational(1), p_alpha, w.q_c, r);
    CHECK(std::abs(w.c_at_C - want_c) < 1e-3 * std::abs(want_c));
  }
}

TEST_CASE("witness requires distinct matrices") {
  SymMatrix C = SymMatrix::identity(1);
  CHECK_THROWS_AS(
      polefrac::norm_two_witness(Monomial{{2}}, C, C, 1, Rational(1, 2), 1),
      std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polefrac/coeffs.hpp"

using polefrac::Rational;

TEST_CASE("first coefficient rows") {
  // (z + 1/(2+z))^1 = 1/2 + 3z/4 + z^2/8 - z^3/16 + z^4/32 - ...
  CHECK(polefrac::coeff_closed(1, 0) == Rational(1, 2));
  CHECK(polefrac::coeff_closed(1, 1) == Rational(3, 4));
  CHECK(polefrac::coeff_closed(1, 2) == Rational(1, 8));
  CHECK(polefrac::coeff_closed(1, 3) == Rational(-1, 16));
  CHECK(polefrac::coeff_closed(1, 4) == Rational(1, 32));
  CHECK(polefrac::coeff_closed(2, 2) == Rational(11, 16));
  CHECK(polefrac::coeff_closed(2, 0) == Rational(1, 4));
  CHECK(polefrac::coeff_closed(0, 0) == Rational(1));
  CHECK(polefrac::coeff_closed(0, 3) == Rational(0));
}

TEST_CASE("closed forms equal the series oracle") {
  for (long n = 0; n <= 24; ++n) {
    polefrac::CoeffTable oracle = polefrac::coeff_oracle(n, n + 20);
    polefrac::CoeffTable closed = polefrac::coeff_closed_table(n, n + 20);
    REQUIRE(oracle.order() == closed.order());
    for (long i = 0; i <= oracle.order(); ++i)
      CHECK(oracle.values[static_cast<size_t>(i)] ==
            closed.values[static_cast<size_t>(i)]);
  }
  CHECK_THROWS_AS(polefrac::coeff_oracle(5, 3), std::invalid_argument);
}

TEST_CASE("head and tail sums") {
  CHECK(polefrac::tail_sum(1) == Rational(1, 12));    // c_2 + c_3 + ... = 1/12
  CHECK(polefrac::tail_sum(2) == Rational(13, 144));
  CHECK(polefrac::head_sum(1) == Rational(1, 2));
  CHECK(polefrac::head_sum(2) == Rational(1));        // 1/4 + 3/4
  CHECK(polefrac::head_sum(0) == Rational(0));
  for (long n = 1; n <= 120; ++n)
    CHECK(polefrac::head_sum(n) == polefrac::head_sum_fast(n));
}

TEST_CASE("four thirds telescoping") {
  // row sums: all coefficients of (z + 1/(2+z))^n at z = 1 give (4/3)^n...
  // here split as head + central + tail, exactly
  for (long n = 1; n <= 60; ++n) CHECK(polefrac::four_thirds_identity_check(n));
}

TEST_CASE("head coefficients are positive") {
  for (long n = 1; n <= 60; ++n)
    for (long i = 0; i <= n; ++i)
      CHECK(polefrac::coeff_closed(n, i) > Rational(0));
}

TEST_CASE("alternating convolution identity") {
  // n = 2, a = 1: 2^{-4} C(4,3) (-1) = -1/4 on both sides
  CHECK(polefrac::alternating_convolution_check(2, 1));
  for (long n = 1; n <= 16; ++n)
    for (long a = -(n + 2); a <= n + 2; ++a)
      CHECK(polefrac::alternating_convolution_check(n, a));
}

TEST_CASE("vandermonde identities") {
  // b = 2, l = 1 upper: C(5,4) = 5 = C(4,2)*1 + C(4,3)*... spot values
  CHECK(polefrac::vandermonde_upper_check(2, 1));
  CHECK(polefrac::vandermonde_lower_check(2, 1));  // C(3,2) = 3 = 6 - 4 + 1
  for (long b = 1; b <= 16; ++b)
    for (long l = -8; l <= 8; ++l) CHECK(polefrac::vandermonde_check(b, l));
}

TEST_CASE("convolution formula for the far coefficients") {
  for (long n = 1; n <= 16; ++n) {
    polefrac::CoeffTable oracle = polefrac::coeff_oracle(n, n + 12);
    for (long l = -n - 1; l <= 8; ++l)
      CHECK(polefrac::convolution_formula_check(oracle, l));
  }
  // and through the self-building overload
  CHECK(polefrac::convolution_formula_check(1, -1));  // c_1^1 = 3/4 route
  CHECK(polefrac::convolution_formula_check(3, 0));
}

TEST_CASE("tail ratio partial sums and bound") {
  for (long n = 1; n <= 100; ++n) {
    polefrac::TailRatio adaptive = polefrac::tail_ratio(n);
    polefrac::TailRatio full = polefrac::tail_ratio(n, true);
    CHECK(adaptive.le_three_halves);
    CHECK(full.remainder_bound == Rational(0));
    CHECK(adaptive.partial <= full.partial);
    CHECK(full.partial <= adaptive.partial + adaptive.remainder_bound);
    // exact factorization T_n = C(2n, n-1)/(3 4^n) R_n
    CHECK(polefrac::tail_sum(n) ==
          Rational(polefrac::binomial(2 * n, n - 1)) * full.partial /
              (Rational(3) * polefrac::pow2(2 * n)));
  }
}

TEST_CASE("tail ratio is increasing in n") {
  Rational prev(0);
  for (long n = 1; n <= 100; ++n) {
    Rational r = polefrac::tail_ratio(n, true).partial;
    CHECK(prev < r);
    prev = r;
  }
}

TEST_CASE("asymptotic report approaches the predicted constants") {
  polefrac::AsymptoticsReport rep = polefrac::asymptotics_report(100);
  CHECK(rep.cnn_gap_ratio > 0.85);
  CHECK(rep.cnn_gap_ratio < 1.15);
  CHECK(rep.t_ratio > 0.85);
  CHECK(rep.t_ratio < 1.15);
  CHECK(rep.s_gap_ratio > 0.85);
  CHECK(rep.s_gap_ratio < 1.15);
  CHECK(rep.r_n < 1.5);
  CHECK(rep.tail.le_three_halves);

  polefrac::AsymptoticsReport far = polefrac::asymptotics_report(1000);
  CHECK(far.cnn_gap_ratio > 0.95);
  CHECK(far.cnn_gap_ratio < 1.05);
  CHECK(far.t_ratio > 0.95);
  CHECK(far.t_ratio < 1.05);
  CHECK(far.s_gap_ratio > 0.95);
  CHECK(far.s_gap_ratio < 1.05);
}

TEST_CASE("head gap equals central gap plus tail, exactly") {
  // rearranged telescoping: (4/3)^n - 1/2 - S_n = (c_n^n - 1/2) + T_n
  for (long n = 1; n <= 40; ++n) {
    Rational four_thirds = Rational(4, 3).pow(n);
    Rational lhs = four_thirds - Rational(1, 2) - polefrac::head_sum(n);
    Rational rhs =
        polefrac::coeff_closed(n, n) - Rational(1, 2) + polefrac::tail_sum(n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(polefrac::coeff_closed(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(polefrac::tail_sum(0), std::invalid_argument);
  CHECK_THROWS_AS(polefrac::asymptotics_report(0), std::invalid_argument);
}

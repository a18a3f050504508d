#include "polefrac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "polefrac/coeffs.hpp"
#include "polefrac/partialfrac.hpp"
#include "polefrac/ratfun.hpp"
#include "polefrac/sampling.hpp"
#include "polefrac/semipole.hpp"
#include "polefrac/series.hpp"

namespace polefrac {
namespace verify {

namespace {

constexpr std::size_t kKeepFailures = 8;

// Sweep caps per profile.
struct Caps {
  long n_coeff, i_extra;
  long n_tel;
  long n_ident, b_vander, n_cnnlo;
  long mn_pm, k_alpha, k_sym, k_bound;
  int diff_configs, diff_points;
  int deriv_configs;
  int sup_terms, combo_checks;
  int sums, witnesses;
  long n_tail_sweep;
};

constexpr Caps kFull = {200, 40, 200, 40, 40, 40, 30, 60, 6, 10,
                        100, 20,  50,  100, 20, 100, 20, 1000};
constexpr Caps kQuick = {50, 20, 50, 20, 20, 20, 15, 20, 4, 10,
                         25, 10, 15, 30,  8,  30,  8,  200};

void fail(CriterionResult& res, std::string where, std::string expected,
          std::string actual) {
  ++res.failed;
  if (res.failures.size() < kKeepFailures)
    res.failures.push_back(
        {std::move(where), std::move(expected), std::move(actual)});
}

void expect(CriterionResult& res, bool ok, const std::string& where) {
  if (ok)
    ++res.passed;
  else
    fail(res, where, "true", "false");
}

void expect_eq(CriterionResult& res, const Rational& want, const Rational& got,
               const std::string& where) {
  if (want == got)
    ++res.passed;
  else
    fail(res, where, want.str(), got.str());
}

void expect_le(CriterionResult& res, double value, double bound,
               const std::string& where) {
  if (value <= bound)
    ++res.passed;
  else
    fail(res, where, "<= " + std::to_string(bound), std::to_string(value));
}

void expect_window(CriterionResult& res, double value, double lo, double hi,
                   const std::string& where) {
  if (lo <= value && value <= hi)
    ++res.passed;
  else
    fail(res, where,
         "in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
         std::to_string(value));
}

const Rational kDeltas[3] = {Rational(1, 2), Rational(2, 5), Rational(1, 3)};

Rational random_window_scalar(std::mt19937_64& eng, const Rational& delta) {
  Rational width = delta.inverse() - delta;
  Rational lo = delta + width * Rational(1, 10);
  Rational hi = delta.inverse() - width * Rational(1, 10);
  return sampling::random_rational(eng, lo, hi, 64);
}

// 1. Closed forms for c_i^n against the truncated-series oracle, with the
// powers of the base series built incrementally at a fixed order.
void criterion_closed_forms(CriterionResult& res, const Caps& caps) {
  const long order = caps.n_coeff + caps.i_extra;
  std::vector<Rational> zc(order + 1, Rational(0));
  zc[1] = Rational(1);
  TruncatedSeries base(zc);
  std::vector<Rational> tc(order + 1, Rational(0));
  tc[0] = Rational(2);
  tc[1] = Rational(1);
  base += TruncatedSeries(tc).reciprocal();

  TruncatedSeries power = TruncatedSeries::constant(Rational(1), order);
  for (long n = 1; n <= caps.n_coeff; ++n) {
    power = power * base;
    const long imax = n + caps.i_extra;
    for (long i = 0; i <= imax; ++i)
      expect_eq(res, power[i], coeff_closed(n, i),
                "c[n=" + std::to_string(n) + ",i=" + std::to_string(i) + "]");
  }
}

// 2. Telescoping identity, positivity of the head coefficients, agreement
// of the two head-sum forms, and the exact tail-ratio factorization.
void criterion_telescoping(CriterionResult& res, const Caps& caps) {
  for (long n = 1; n <= caps.n_tel; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    expect(res, four_thirds_identity_check(n), "four-thirds telescoping" + tag);
    expect_eq(res, head_sum(n), head_sum_fast(n), "head sum forms" + tag);
    expect(res, tail_sum(n) > Rational(0), "tail sum positive" + tag);
    TailRatio tr = tail_ratio(n, true);
    expect_eq(res, tail_sum(n),
              Rational(binomial(2 * n, n - 1)) * tr.partial /
                  (Rational(3) * pow2(2 * n)),
              "tail ratio factorization" + tag);
    for (long i = 0; i <= n; ++i)
      expect(res, coeff_closed(n, i) > Rational(0),
             "positivity c[n=" + std::to_string(n) + ",i=" + std::to_string(i) +
                 "]");
  }
}

// 3. The three binomial identity families.
void criterion_identities(CriterionResult& res, const Caps& caps) {
  for (long n = 1; n <= caps.n_ident; ++n)
    for (long a = -(n + 2); a <= n + 2; ++a)
      expect(res, alternating_convolution_check(n, a),
             "alternating convolution n=" + std::to_string(n) +
                 " a=" + std::to_string(a));
  for (long b = 1; b <= caps.b_vander; ++b)
    for (long l = -10; l <= 10; ++l)
      expect(res, vandermonde_check(b, l),
             "vandermonde b=" + std::to_string(b) + " l=" + std::to_string(l));
  for (long n = 1; n <= caps.n_cnnlo; ++n) {
    CoeffTable oracle = coeff_oracle(n, n + 15);
    for (long l = -n - 1; l <= 10; ++l)
      expect(res, convolution_formula_check(oracle, l),
             "convolution formula n=" + std::to_string(n) +
                 " l=" + std::to_string(l));
  }
}

// 4. Partial-fraction data: the two-pole expansion, the alpha expansion
// with both weight bounds, and the quadratic-pole expansion checked
// symbolically, numerically, and through the exact magnitude bound.
void criterion_partial_fractions(CriterionResult& res, const Caps& caps) {
  const Rational zs[3] = {Rational(1, 2), Rational(-1, 3), Rational(5, 7)};
  for (long m = 1; m <= caps.mn_pm; ++m)
    for (long n = 1; n <= caps.mn_pm; ++n) {
      PMExpansion e = decomp_pm(m, n);
      bool positive = true;
      for (const auto& v : e.a) positive = positive && v > Rational(0);
      for (const auto& v : e.b) positive = positive && v > Rational(0);
      const std::string tag =
          " m=" + std::to_string(m) + " n=" + std::to_string(n);
      expect(res, positive, "pm weights positive" + tag);
      expect_eq(res, Rational(1), e.weight_total(), "pm weight total" + tag);
      for (const auto& z : zs)
        expect(res, pm_recombine_check(e, z),
               "pm recombination" + tag + " z=" + z.str());
    }

  for (long k = 1; k <= caps.k_alpha; ++k) {
    AlphaExpansion ae = decomp_alphas(k);
    const std::string tag = " k=" + std::to_string(k);
    expect_eq(res, Rational(k % 2 ? -1 : 1), ae.constant,
              "alpha constant" + tag);
    expect(res, ae.coarse_bound_holds(), "alpha coarse bound" + tag);
    expect(res, ae.improved_bound_holds(), "alpha improved bound" + tag);
    expect(res, alpha_vs_c_check(k), "alpha vs coefficient" + tag);
  }

  std::mt19937_64 eng(0xC0FFEEULL + 4);
  for (long k = 1; k <= caps.k_sym; ++k)
    for (int draw = 0; draw < 4; ++draw) {
      const Rational& delta = kDeltas[draw % 2];
      Rational c = random_window_scalar(eng, delta);
      QuadPoleExpansion e = decomp_quad_pole(k, c, delta);
      const std::string tag = " k=" + std::to_string(k) + " C=" + c.str();
      expect(res, quad_pole_symbolic_check(e), "quad pole symbolic" + tag);
      expect_le(res, quad_pole_recombine_numeric(e, 40, 0x9e3779b9ULL + draw),
                1e-9, "quad pole numeric" + tag);
    }
  for (long k = 1; k <= caps.k_bound; ++k)
    for (int draw = 0; draw < 10; ++draw) {
      const Rational& delta = kDeltas[draw % 3];
      Rational c = random_window_scalar(eng, delta);
      expect(res, decomp_quad_pole(k, c, delta).coefficient_bound_holds(),
             "quad pole magnitude bound k=" + std::to_string(k) +
                 " C=" + c.str() + " delta=" + delta.str());
    }
}

// 5. The exact difference decomposition: term count, class membership of
// every piece, and pointwise equality with g - f at random rational points.
void criterion_difference(CriterionResult& res, const Caps& caps) {
  std::mt19937_64 eng(0xC0FFEEULL + 5);
  for (int cfg = 0; cfg < caps.diff_configs; ++cfg) {
    const long d = 1 + cfg % 3;
    const long r = 1 + (cfg / 3) % 4;
    const Rational& delta = kDeltas[(cfg / 12) % 3];
    Monomial P = sampling::random_monomial(eng, 2 * r, d);
    SymMatrix C = sampling::random_window_matrix(eng, d, delta);
    SymMatrix D = sampling::random_window_matrix(eng, d, delta);
    Combo combo = difference_decompose(P, C, D, r, delta);
    const std::string tag = " cfg=" + std::to_string(cfg);

    expect(res,
           static_cast<long>(combo.terms.size()) == r * d * (d + 1) / 2,
           "difference term count" + tag);
    bool members = true;
    for (const auto& ct : combo.terms) members = members && ct.term.in_class(2);
    expect(res, members, "difference terms in class" + tag);

    ClassTerm f(P, std::vector<SymMatrix>(r, C), delta);
    ClassTerm g(P, std::vector<SymMatrix>(r, D), delta);
    for (int p = 0; p < caps.diff_points; ++p) {
      std::vector<Rational> x =
          sampling::random_point(eng, d, Rational(-2), Rational(2), 128);
      expect_eq(res, g.eval(x) - f.eval(x), combo.eval(x),
                "difference identity" + tag + " point=" + std::to_string(p));
    }
  }
}

// 6. Analytic derivative terms against exact central differences.
void criterion_derivatives(CriterionResult& res, const Caps& caps) {
  std::mt19937_64 eng(0xC0FFEEULL + 6);
  for (int cfg = 0; cfg < caps.deriv_configs; ++cfg) {
    const long d = 1 + cfg % 3;
    const long r = 1 + (cfg / 3) % 3;
    const Rational& delta = kDeltas[cfg % 2];
    Monomial P = sampling::random_monomial(eng, 2 * r, d);
    SymMatrix C = sampling::random_window_matrix(eng, d, delta);
    std::uniform_int_distribution<long> kdist(0, d - 1);
    long k = kdist(eng);
    std::uniform_int_distribution<long> ldist(k, d - 1);
    long l = ldist(eng);
    std::vector<Rational> x =
        sampling::random_point(eng, d, Rational(-1), Rational(1), 64);
    DiffCheck dc = finite_diff_check(P, C, r, k, l, x, 1e-5, delta);
    expect_le(res, dc.rel_err, 1e-6,
              "finite difference cfg=" + std::to_string(cfg) +
                  " k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
}

// 7. Sup-norm sandwich on random class terms, and certificate consistency
// on difference combos.
void criterion_sup_bounds(CriterionResult& res, const Caps& caps) {
  std::mt19937_64 eng(0xC0FFEEULL + 7);
  for (int t = 0; t < caps.sup_terms; ++t) {
    const long d = 1 + t % 3;
    const long r = 1 + (t / 3) % 3;
    const Rational& delta = kDeltas[t % 3];
    ClassTerm term = sampling::random_class_term(eng, d, r, delta, 2);
    SupBounds sb = sup_bounds(term);
    const std::string tag = " term=" + std::to_string(t);
    expect_le(res, sb.empirical_sup, sb.upper.to_double() * (1 + 1e-9),
              "empirical below upper" + tag);
    expect_le(res, sb.lower.to_double() * (1 - 1e-9), sb.empirical_sup,
              "empirical above lower" + tag);
  }

  for (int c = 0; c < caps.combo_checks; ++c) {
    const long d = 1 + c % 3;
    const long r = 1 + c % 2;
    const Rational& delta = kDeltas[c % 3];
    Monomial P = sampling::random_monomial(eng, 2 * r, d);
    SymMatrix C = sampling::random_window_matrix(eng, d, delta);
    SymMatrix D = sampling::random_window_matrix(eng, d, delta);
    Combo combo = difference_decompose(P, C, D, r, delta);
    Rational cert = norm_certificate(combo, delta, r + 1, 2);
    double bound = (cert * delta.pow(-(r + 1))).to_double();
    expect_le(res, empirical_sup(combo), bound * (1 + 1e-9),
              "certificate dominates sup combo=" + std::to_string(c));
  }
}

// 8. Semipole recovery on random meromorphic sums with known ground truth,
// plus the two-pole witness with its closed-form top coefficients.
void criterion_recovery(CriterionResult& res, const Caps& caps) {
  std::mt19937_64 eng(0xC0FFEEULL + 8);
  for (int s = 0; s < caps.sums; ++s) {
    sampling::SampledPole sp = sampling::random_meromorphic_sum(eng);
    RecoveredCoefficients rec =
        recover_coefficients(sp.sum.fn(), sp.y, sp.order);
    for (std::size_t idx = 0; idx < sp.truth.size(); ++idx) {
      double rel = std::abs(rec.coeffs[idx] - sp.truth[idx]) /
                   std::max(1e-12, std::abs(sp.truth[idx]));
      expect_le(res, rel, 1e-5,
                "recovered coefficient sum=" + std::to_string(s) + " order=" +
                    std::to_string(sp.order - static_cast<long>(idx)));
    }
  }

  for (int w = 0; w < caps.witnesses; ++w) {
    const long d = 1 + w % 3;
    const long r = 1 + w % 2;
    const Rational delta(1, 2);
    Monomial P = sampling::random_monomial(eng, 2 * r, d);
    SymMatrix C = sampling::random_window_matrix(eng, d, delta);
    SymMatrix D = sampling::random_window_matrix(eng, d, delta);
    while (D == C) D = sampling::random_window_matrix(eng, d, delta);
    const std::string tag = " witness=" + std::to_string(w);
    try {
      WitnessResult wr =
          norm_two_witness(P, C, D, r, delta, 0xA11CEULL + w);
      expect(res, wr.opposite_signs(), "opposite signs" + tag);
      Rational p_alpha = P.eval(wr.alpha);
      Complex want_c = witness_expected_top(Rational(1), p_alpha, wr.q_c, r);
      Complex want_d = witness_expected_top(Rational(-1), p_alpha, wr.q_d, r);
      expect_le(res, std::abs(wr.c_at_C - want_c) / std::abs(want_c), 1e-3,
                "witness top at C" + tag);
      expect_le(res, std::abs(wr.c_at_D - want_d) / std::abs(want_d), 1e-3,
                "witness top at D" + tag);
    } catch (const recovery_error& e) {
      fail(res, "witness setup" + tag, "generic ray found", e.what());
    }
  }
}

// 9. The three-term counterexample and the exact two-term split with its
// certificate value.
void criterion_counterexample(CriterionResult& res, const Caps&) {
  expect(res, verify_counterexample(), "three-term counterexample");
  const Rational alphas[3] = {Rational(1, 2), Rational(9, 10),
                              Rational(1, 10)};
  const Rational xs[5] = {Rational(0), Rational(1, 2), Rational(1),
                          Rational(-3, 2), Rational(7, 5)};
  for (const Rational& alpha : alphas) {
    Rational delta = alpha / Rational(2);
    Combo combo = two_term_split(alpha, delta);
    Rational cert = norm_certificate(combo, delta, 2, 2);
    Rational want =
        Rational(2) * alpha / (Rational(1) - alpha * alpha);
    expect_eq(res, want, cert, "split certificate alpha=" + alpha.str());
    for (const Rational& x : xs) {
      Rational x2 = x * x;
      Rational target = x2 * x2 /
                        ((Rational(1) + alpha * x2) *
                         (Rational(1) + x2 / alpha));
      expect_eq(res, target, combo.eval({x}),
                "split identity alpha=" + alpha.str() + " x=" + x.str());
    }
  }
}

// 10. Asymptotic ratio windows and the tail-ratio bound sweep.
void criterion_asymptotics(CriterionResult& res, const Caps& caps) {
  AsymptoticsReport rep = asymptotics_report(100);
  expect_window(res, rep.cnn_gap_ratio, 0.85, 1.15, "central gap ratio n=100");
  expect_window(res, rep.t_ratio, 0.85, 1.15, "tail ratio n=100");
  expect_window(res, rep.s_gap_ratio, 0.85, 1.15, "head gap ratio n=100");
  AsymptoticsReport rep2 = asymptotics_report(1000);
  expect_window(res, rep2.cnn_gap_ratio, 0.95, 1.05,
                "central gap ratio n=1000");
  expect_window(res, rep2.t_ratio, 0.95, 1.05, "tail ratio n=1000");
  expect_window(res, rep2.s_gap_ratio, 0.95, 1.05, "head gap ratio n=1000");
  for (long n = 1; n <= caps.n_tail_sweep; ++n)
    expect(res, tail_ratio(n).le_three_halves,
           "tail ratio bound n=" + std::to_string(n));
}

}  // namespace

std::vector<CriterionResult> run_all(Profile profile) {
  const Caps& caps = (profile == Profile::full) ? kFull : kQuick;
  struct Entry {
    int id;
    const char* name;
    void (*fn)(CriterionResult&, const Caps&);
  };
  const Entry entries[] = {
      {1, "closed forms match series oracle", criterion_closed_forms},
      {2, "telescoping sum and positivity", criterion_telescoping},
      {3, "binomial identity sweeps", criterion_identities},
      {4, "partial fraction expansions", criterion_partial_fractions},
      {5, "difference decomposition identity", criterion_difference},
      {6, "derivative terms vs finite differences", criterion_derivatives},
      {7, "sup-norm sandwich and certificates", criterion_sup_bounds},
      {8, "semipole coefficient recovery", criterion_recovery},
      {9, "counterexample and two-term split", criterion_counterexample},
      {10, "asymptotic ratio windows", criterion_asymptotics},
  };

  std::vector<CriterionResult> out;
  out.reserve(std::size(entries));
  for (const Entry& e : entries) {
    CriterionResult res;
    res.id = e.id;
    res.name = e.name;
    auto start = std::chrono::steady_clock::now();
    e.fn(res, caps);
    res.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace verify
}  // namespace polefrac

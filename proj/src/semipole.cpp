#include "polefrac/semipole.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polefrac {

namespace {

constexpr double kReliableBar = 1e-4;
constexpr int kTopLo = 4, kTopHi = 20;   // schedule for the top order
constexpr int kRestLo = 4, kRestHi = 14; // shorter schedule after subtractions
constexpr int kMaxDepth = 12;            // extrapolation depth cap

}  // namespace

Complex MeromorphicSum::eval(Complex z) const {
  Complex acc(0, 0);
  for (const auto& t : terms) {
    const Complex dz = z - t.z0;
    if (std::abs(dz) < 1e-12) throw std::domain_error("meromorphic sum: evaluation at a pole");
    acc += t.a / std::pow(dz, t.k);
  }
  return acc;
}

std::function<Complex(Complex)> MeromorphicSum::fn() const {
  return [copy = *this](Complex z) { return copy.eval(z); };
}

std::vector<double> geometric_schedule(int j_lo, int j_hi) {
  if (j_lo >= j_hi) throw std::invalid_argument("geometric_schedule: need j_lo < j_hi");
  std::vector<double> ts;
  for (int j = j_lo; j <= j_hi; ++j) ts.push_back(std::ldexp(1.0, -j));
  return ts;
}

LimitEstimate semipole_limit(const std::function<Complex(Complex)>& f, double y, long r,
                             const std::vector<double>& schedule) {
  const size_t n = schedule.size();
  if (n < 4) throw std::invalid_argument("semipole_limit: schedule needs at least 4 points");
  for (size_t i = 0; i < n; ++i) {
    if (schedule[i] <= 0) throw std::invalid_argument("semipole_limit: schedule must be positive");
    if (i > 0 && schedule[i] >= schedule[i - 1])
      throw std::invalid_argument("semipole_limit: schedule must be strictly decreasing");
  }
  if (r < 0) throw std::invalid_argument("semipole_limit: order must be >= 0");

  // Neville table for polynomial extrapolation to t = 0:
  //   T[i][j] = (t_{i-j} T[i][j-1] - t_i T[i-1][j-1]) / (t_{i-j} - t_i).
  // Depth is capped and the winning entry is the diagonal one whose
  // difference from the previous diagonal is smallest; that difference is
  // the error bar.
  std::vector<std::vector<Complex>> tab(n);
  for (size_t i = 0; i < n; ++i) {
    const double t = schedule[i];
    const Complex g = std::pow(t, static_cast<double>(r)) * f(Complex(t, y));
    const size_t depth = std::min<size_t>(i, kMaxDepth);
    tab[i].resize(depth + 1);
    tab[i][0] = g;
    for (size_t j = 1; j <= depth; ++j) {
      const double ta = schedule[i - j], tb = schedule[i];
      tab[i][j] = (ta * tab[i][j - 1] - tb * tab[i - 1][j - 1]) / (ta - tb);
    }
  }
  LimitEstimate best;
  best.value = tab[0][0];
  best.error_bar = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < n; ++i) {
    const Complex cur = tab[i].back();
    const Complex prev = tab[i - 1].back();
    const double delta = std::abs(cur - prev);
    if (delta <= best.error_bar) {
      best.value = cur;
      best.error_bar = delta;
    }
  }
  best.reliable = best.error_bar <= kReliableBar;
  return best;
}

RecoveredCoefficients recover_coefficients(std::function<Complex(Complex)> f, double y,
                                           long max_order) {
  if (max_order < 1) throw std::invalid_argument("recover_coefficients: max_order must be >= 1");
  RecoveredCoefficients out;
  std::function<Complex(Complex)> current = std::move(f);
  for (long order = max_order; order >= 1; --order) {
    const auto schedule = (order == max_order) ? geometric_schedule(kTopLo, kTopHi)
                                               : geometric_schedule(kRestLo, kRestHi);
    const LimitEstimate est = semipole_limit(current, y, order, schedule);
    out.coeffs.push_back(est.value);
    out.error_bars.push_back(est.error_bar);
    if (order > 1) {
      const Complex c = est.value;
      const Complex pole(0, y);
      current = [prev = current, c, pole, order](Complex z) {
        return prev(z) - c / std::pow(z - pole, order);
      };
    }
  }
  out.all_reliable = std::all_of(out.error_bars.begin(), out.error_bars.end(),
                                 [](double b) { return b <= kReliableBar; });
  return out;
}

Rational RaySlice::eval(const Rational& t) const {
  const Rational t2 = t * t;
  Rational acc(0);
  for (const auto& term : terms) {
    Rational den(1);
    for (const auto& q : term.qs) den *= Rational(1) + t2 * q;
    if (den.is_zero()) throw std::domain_error("ray slice: denominator vanishes");
    acc += term.lambda * term.p_alpha * t2.pow(static_cast<long>(term.qs.size())) / den;
  }
  return acc;
}

Complex RaySlice::eval(Complex t) const {
  const Complex t2 = t * t;
  Complex acc(0, 0);
  for (const auto& term : terms) {
    Complex den(1, 0);
    for (const auto& q : term.qs) den *= 1.0 + t2 * q.to_double();
    if (std::abs(den) < 1e-14) throw std::domain_error("ray slice: evaluation at a pole");
    acc += term.lambda.to_double() * term.p_alpha.to_double() *
           std::pow(t2, static_cast<double>(term.qs.size())) / den;
  }
  return acc;
}

std::function<Complex(Complex)> RaySlice::fn() const {
  return [copy = *this](Complex t) { return copy.eval(t); };
}

RaySlice ray_restrict(const Combo& f, const std::vector<Rational>& alpha) {
  if (f.terms.empty()) throw std::invalid_argument("ray_restrict: empty combo");
  if (static_cast<long>(alpha.size()) != f.dim())
    throw std::invalid_argument("ray_restrict: dimension mismatch");
  for (const auto& a : alpha)
    if (a < Rational(1) || a > Rational(2))
      throw std::invalid_argument("ray_restrict: direction must lie in [1,2]^d");
  RaySlice s;
  s.alpha = alpha;
  for (const auto& t : f.terms) {
    RaySliceTerm st;
    st.lambda = t.lambda;
    st.p_alpha = t.term.numerator().eval(alpha);
    for (const auto& c : t.term.denominators()) st.qs.push_back(quadform_eval(c, alpha));
    s.terms.push_back(std::move(st));
  }
  return s;
}

bool genericity_check(const std::vector<Rational>& alpha, const Combo& f) {
  std::vector<const SymMatrix*> distinct;
  for (const auto& t : f.terms) {
    if (t.term.numerator().eval(alpha).is_zero()) return false;
    for (const auto& c : t.term.denominators()) {
      bool seen = false;
      for (const auto* s : distinct)
        if (*s == c) {
          seen = true;
          break;
        }
      if (!seen) distinct.push_back(&c);
    }
  }
  std::vector<Rational> qs;
  qs.reserve(distinct.size());
  for (const auto* c : distinct) qs.push_back(quadform_eval(*c, alpha));
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = i + 1; j < qs.size(); ++j)
      if (qs[i] == qs[j]) return false;
  return true;
}

std::vector<Rational> random_direction(long d, std::mt19937_64& eng) {
  if (d < 1) throw std::invalid_argument("random_direction: d must be >= 1");
  std::uniform_int_distribution<long> dist(0, 4096);
  std::vector<Rational> alpha;
  alpha.reserve(static_cast<size_t>(d));
  for (long i = 0; i < d; ++i) alpha.push_back(Rational(1) + Rational(dist(eng), 4096));
  return alpha;
}

std::vector<Rational> random_direction(long d, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  return random_direction(d, eng);
}

namespace {

using Poly = std::vector<Rational>;  // coefficients in u = x^2

Poly poly_mul(const Poly& f, const Poly& g) {
  Poly r(f.size() + g.size() - 1, Rational(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  return r;
}

Poly poly_sub(Poly f, const Poly& g) {
  if (f.size() < g.size()) f.resize(g.size(), Rational(0));
  for (size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
  return f;
}

}  // namespace

bool verify_counterexample() {
  // 2/((1+u)(1+3u)) - 1/((1+u)(1+2u)) = 1/((1+2u)(1+3u)) in u = x^2;
  // multiplied through by (1+u)(1+2u)(1+3u) this is
  //   2(1+2u) - (1+3u) = (1+u).
  const Poly h1{Rational(1), Rational(1)};
  const Poly h2{Rational(1), Rational(2)};
  const Poly h3{Rational(1), Rational(3)};
  const Poly lhs = poly_sub(poly_mul({Rational(2)}, h2), h3);
  if (lhs != h1) return false;
  // Cross-check against the uncleared form at a sample point.
  const Rational u(1);
  const auto at = [&](const Poly& p) {
    Rational acc(0), up(1);
    for (const auto& c : p) {
      acc += c * up;
      up *= u;
    }
    return acc;
  };
  const Rational lhs_val = Rational(2) / (at(h1) * at(h3)) - Rational(1) / (at(h1) * at(h2));
  return lhs_val == Rational(1) / (at(h2) * at(h3));
}

bool WitnessResult::opposite_signs() const {
  if (std::abs(c_at_C) < 1e-9 || std::abs(c_at_D) < 1e-9) return false;
  const Complex ratio = c_at_C / c_at_D;
  return ratio.real() < 0 && std::abs(ratio.imag()) <= 1e-3 * std::abs(ratio);
}

Complex witness_expected_top(const Rational& lambda, const Rational& p_alpha, const Rational& q,
                             long r) {
  const Complex half_i(0, 0.5);
  return lambda.to_double() * p_alpha.to_double() * std::pow(half_i, static_cast<double>(r)) *
         std::pow(q.to_double(), -1.5 * static_cast<double>(r));
}

WitnessResult norm_two_witness(const Monomial& P, const SymMatrix& C, const SymMatrix& D, long r,
                               const Rational& delta, std::uint64_t seed) {
  if (C == D) throw std::invalid_argument("norm_two_witness: C and D must differ");
  Combo f;
  f.terms.push_back(ComboTerm{Rational(1), ClassTerm(P, std::vector<SymMatrix>(static_cast<size_t>(r), C), delta)});
  f.terms.push_back(ComboTerm{Rational(-1), ClassTerm(P, std::vector<SymMatrix>(static_cast<size_t>(r), D), delta)});

  std::mt19937_64 eng(seed);
  std::vector<Rational> alpha, fallback;
  for (int attempt = 0; attempt < 50; ++attempt) {
    auto cand = random_direction(P.dim(), eng);
    if (!genericity_check(cand, f)) continue;
    if (fallback.empty()) fallback = cand;
    const Rational qc = quadform_eval(C, cand), qd = quadform_eval(D, cand);
    const Rational sep = (qc - qd).abs() * Rational(25);
    if (sep >= std::max(qc, qd)) {  // prefer >= 4% relative separation
      alpha = cand;
      break;
    }
  }
  if (alpha.empty()) alpha = fallback;
  if (alpha.empty())
    throw recovery_error("norm_two_witness: no generic ray found after 50 draws");

  WitnessResult w;
  w.alpha = alpha;
  w.q_c = quadform_eval(C, alpha);
  w.q_d = quadform_eval(D, alpha);
  const RaySlice slice = ray_restrict(f, alpha);
  const auto fn = slice.fn();
  const double yc = 1.0 / std::sqrt(w.q_c.to_double());
  const double yd = 1.0 / std::sqrt(w.q_d.to_double());
  const RecoveredCoefficients rc = recover_coefficients(fn, yc, r);
  const RecoveredCoefficients rd = recover_coefficients(fn, yd, r);
  w.c_at_C = rc.coeffs.front();
  w.c_at_D = rd.coeffs.front();
  w.err_c = rc.error_bars.front();
  w.err_d = rd.error_bars.front();
  return w;
}

}  // namespace polefrac

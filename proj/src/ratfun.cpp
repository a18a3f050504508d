#include "polefrac/ratfun.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace polefrac {

long Monomial::degree() const {
  long s = 0;
  for (long e : exponents) {
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
    s += e;
  }
  return s;
}

Rational Monomial::eval(const std::vector<Rational>& x) const {
  if (x.size() != exponents.size()) throw std::invalid_argument("monomial: dimension mismatch");
  Rational acc(1);
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (x[i].is_zero()) return Rational(0);
    acc *= x[i].pow(exponents[i]);
  }
  return acc;
}

Rational h_eval(const SymMatrix& C, const std::vector<Rational>& x) {
  return Rational(1) + quadform_eval(C, x);
}

ClassTerm::ClassTerm(Monomial P, std::vector<SymMatrix> denoms, Rational delta)
    : p_(std::move(P)), denoms_(std::move(denoms)), delta_(std::move(delta)) {
  if (denoms_.empty()) throw std::invalid_argument("term: need at least one denominator factor");
  if (delta_.sign() <= 0 || delta_ >= Rational(1))
    throw std::invalid_argument("term: delta must satisfy 0 < delta < 1");
  const long d = p_.dim();
  for (const auto& m : denoms_)
    if (m.dim() != d) throw std::invalid_argument("term: denominator dimension mismatch");
  if (p_.degree() != 2 * order())
    throw std::invalid_argument("term: numerator degree must equal twice the factor count");
}

Rational ClassTerm::eval(const std::vector<Rational>& x) const {
  Rational den(1);
  for (const auto& c : denoms_) den *= h_eval(c, x);
  if (den.is_zero()) throw std::domain_error("term: denominator vanishes at sample point");
  return p_.eval(x) / den;
}

long ClassTerm::distinct_denominators() const {
  std::vector<const SymMatrix*> seen;
  for (const auto& m : denoms_) {
    bool found = false;
    for (const auto* s : seen)
      if (*s == m) {
        found = true;
        break;
      }
    if (!found) seen.push_back(&m);
  }
  return static_cast<long>(seen.size());
}

bool ClassTerm::in_class(long j) const { return class_failure(j).empty(); }

std::string ClassTerm::class_failure(long j) const {
  for (size_t s = 0; s < denoms_.size(); ++s)
    if (!in_window(denoms_[s], delta_))
      return "denominator " + std::to_string(s) + " outside the delta-window";
  if (distinct_denominators() > j)
    return "more than " + std::to_string(j) + " distinct denominator matrices";
  return {};
}

long Combo::dim() const { return terms.empty() ? 0 : terms.front().term.dim(); }

Rational Combo::eval(const std::vector<Rational>& x) const {
  Rational acc(0);
  for (const auto& t : terms) {
    if (t.lambda.is_zero()) continue;
    acc += t.lambda * t.term.eval(x);
  }
  return acc;
}

namespace {

// Evaluation points for the empirical sup: box grid (d <= 2) or random
// box samples (d >= 3), plus the diagonal rays.
std::vector<std::vector<Rational>> sample_points(long d, const GridSpec& grid) {
  std::vector<std::vector<Rational>> pts;
  if (d <= 0) throw std::invalid_argument("sup sampling: dimension must be positive");
  if (grid.resolution < 2) throw std::invalid_argument("sup sampling: resolution must be >= 2");
  const Rational step = Rational(2) * grid.box / Rational(grid.resolution - 1);
  if (d == 1) {
    for (long k = 0; k < grid.resolution; ++k) pts.push_back({-grid.box + Rational(k) * step});
  } else if (d == 2) {
    for (long k1 = 0; k1 < grid.resolution; ++k1)
      for (long k2 = 0; k2 < grid.resolution; ++k2)
        pts.push_back({-grid.box + Rational(k1) * step, -grid.box + Rational(k2) * step});
  } else {
    std::mt19937_64 eng(grid.seed);
    std::uniform_int_distribution<long> dist(0, 4096);
    for (long s = 0; s < grid.random_samples; ++s) {
      std::vector<Rational> x;
      x.reserve(static_cast<size_t>(d));
      for (long i = 0; i < d; ++i)
        x.push_back(-grid.box + Rational(2) * grid.box * Rational(dist(eng), 4096));
      pts.push_back(std::move(x));
    }
  }
  for (long m : grid.ray_magnitudes)
    pts.emplace_back(static_cast<size_t>(d), Rational(m));
  return pts;
}

template <typename F>
double empirical_sup_impl(long d, const GridSpec& grid, const F& eval) {
  double sup = 0.0;
  for (const auto& x : sample_points(d, grid)) sup = std::max(sup, eval(x).abs().to_double());
  return sup;
}

}  // namespace

SupBounds sup_bounds(const ClassTerm& f, const GridSpec& grid) {
  SupBounds b;
  b.upper = f.delta().inverse().pow(f.order());
  b.lower = (f.delta() / Rational(f.dim())).pow(f.order());
  b.empirical_sup =
      empirical_sup_impl(f.dim(), grid, [&](const std::vector<Rational>& x) { return f.eval(x); });
  return b;
}

double empirical_sup(const Combo& f, const GridSpec& grid) {
  if (f.terms.empty()) return 0.0;
  return empirical_sup_impl(f.dim(), grid,
                            [&](const std::vector<Rational>& x) { return f.eval(x); });
}

Combo difference_decompose(const Monomial& P, const SymMatrix& C, const SymMatrix& D, long r,
                           const Rational& delta) {
  const long d = P.dim();
  if (r < 1) throw std::invalid_argument("difference_decompose: r must be >= 1");
  if (C.dim() != d || D.dim() != d)
    throw std::invalid_argument("difference_decompose: dimension mismatch");
  if (P.degree() != 2 * r)
    throw std::invalid_argument("difference_decompose: numerator degree must be 2r");
  if (!in_window(C, delta) || !in_window(D, delta))
    throw std::invalid_argument("difference_decompose: matrices must lie in the delta-window");
  Combo combo;
  for (long k = 0; k < d; ++k)
    for (long l = k; l < d; ++l) {
      const Rational weight = (k == l) ? Rational(1) : Rational(2);
      const Rational lambda = -(D.at(k, l) - C.at(k, l)) * weight;
      Monomial num = P;
      num.exponents[static_cast<size_t>(k)] += 1;
      num.exponents[static_cast<size_t>(l)] += 1;
      for (long j = 0; j < r; ++j) {
        // x_k x_l P h_C^{j-r} h_D^{-j-1}: r-j copies of C, j+1 copies of D.
        std::vector<SymMatrix> denoms;
        denoms.reserve(static_cast<size_t>(r + 1));
        for (long s = 0; s < r - j; ++s) denoms.push_back(C);
        for (long s = 0; s < j + 1; ++s) denoms.push_back(D);
        combo.terms.push_back(ComboTerm{lambda, ClassTerm(num, std::move(denoms), delta)});
      }
    }
  return combo;
}

std::pair<Rational, ClassTerm> partial_derivative_term(const Monomial& P, const SymMatrix& C,
                                                       long r, long k, long l,
                                                       const Rational& delta) {
  const long d = P.dim();
  if (r < 1) throw std::invalid_argument("partial_derivative_term: r must be >= 1");
  if (C.dim() != d) throw std::invalid_argument("partial_derivative_term: dimension mismatch");
  if (k < 0 || l < 0 || k > l || l >= d)
    throw std::invalid_argument("partial_derivative_term: need 0 <= k <= l < d");
  if (P.degree() != 2 * r)
    throw std::invalid_argument("partial_derivative_term: numerator degree must be 2r");
  const Rational coeff = Rational(-r) * ((k == l) ? Rational(1) : Rational(2));
  Monomial num = P;
  num.exponents[static_cast<size_t>(k)] += 1;
  num.exponents[static_cast<size_t>(l)] += 1;
  std::vector<SymMatrix> denoms(static_cast<size_t>(r + 1), C);
  return {coeff, ClassTerm(num, std::move(denoms), delta)};
}

DiffCheck finite_diff_check(const Monomial& P, const SymMatrix& C, long r, long k, long l,
                            const std::vector<Rational>& x, double h, const Rational& delta) {
  if (h <= 0) throw std::invalid_argument("finite_diff_check: h must be positive");
  const Rational hr = Rational::from_double(h);
  SymMatrix cp = C, cm = C;
  cp.set(k, l, C.at(k, l) + hr);
  cm.set(k, l, C.at(k, l) - hr);
  if (!in_window(C, delta) || !in_window(cp, delta) || !in_window(cm, delta))
    throw std::invalid_argument("finite_diff_check: matrix leaves the delta-window");

  auto phi = [&](const SymMatrix& m) {
    Rational den = h_eval(m, x).pow(r);
    return P.eval(x) / den;
  };
  const Rational numeric = (phi(cp) - phi(cm)) / (Rational(2) * hr);
  const auto [coeff, term] = partial_derivative_term(P, C, r, k, l, delta);
  const Rational analytic = coeff * term.eval(x);

  DiffCheck res;
  res.analytic = analytic.to_double();
  res.numeric = numeric.to_double();
  const Rational err = (analytic - numeric).abs();
  const Rational scale = std::max(Rational(1), analytic.abs());
  res.rel_err = (err / scale).to_double();
  return res;
}

Rational norm_certificate(const Combo& f, const Rational& delta, long r, long j) {
  Rational total(0);
  for (size_t s = 0; s < f.terms.size(); ++s) {
    const ClassTerm& t = f.terms[s].term;
    if (t.order() > r)
      throw std::invalid_argument("norm_certificate: term " + std::to_string(s) +
                                  " has more than r denominator factors");
    for (size_t v = 0; v < t.denominators().size(); ++v)
      if (!in_window(t.denominators()[v], delta))
        throw std::invalid_argument("norm_certificate: term " + std::to_string(s) +
                                    " denominator " + std::to_string(v) +
                                    " outside the delta-window");
    if (t.distinct_denominators() > j)
      throw std::invalid_argument("norm_certificate: term " + std::to_string(s) +
                                  " has more than j distinct denominators");
    total += f.terms[s].lambda.abs();
  }
  return total;
}

Combo two_term_split(const Rational& alpha, const Rational& delta) {
  if (delta.sign() <= 0 || delta >= alpha || alpha >= Rational(1))
    throw std::invalid_argument("two_term_split: need 0 < delta < alpha < 1");
  const Rational lambda = alpha / (Rational(1) - alpha * alpha);
  const Monomial x2{{2}};
  Combo combo;
  combo.terms.push_back(
      ComboTerm{lambda, ClassTerm(x2, {SymMatrix::diagonal({alpha})}, delta)});
  combo.terms.push_back(
      ComboTerm{-lambda, ClassTerm(x2, {SymMatrix::diagonal({alpha.inverse()})}, delta)});
  return combo;
}

Integer monomial_count(long r, long d) {
  if (r < 0 || d < 1) throw std::invalid_argument("monomial_count: need r >= 0, d >= 1");
  return binomial(2 * r + d - 1, d - 1);
}

namespace {

void enumerate(long remaining, long pos, std::vector<long>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == static_cast<long>(cur.size())) {
    cur[static_cast<size_t>(pos)] = remaining;
    out.push_back(Monomial{cur});
    return;
  }
  for (long e = remaining; e >= 0; --e) {
    cur[static_cast<size_t>(pos)] = e;
    enumerate(remaining - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(long degree, long d) {
  if (degree < 0 || d < 1) throw std::invalid_argument("monomials_of_degree: bad arguments");
  std::vector<long> cur(static_cast<size_t>(d), 0);
  std::vector<Monomial> out;
  enumerate(degree, 0, cur, out);
  return out;
}

}  // namespace polefrac

#include "polefrac/partialfrac.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "polefrac/coeffs.hpp"
#include "polefrac/series.hpp"

namespace polefrac {

Rational PMExpansion::weight_total() const {
  Rational s(0);
  for (const auto& v : a) s += v;
  for (const auto& v : b) s += v;
  return s;
}

PMExpansion decomp_pm(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("decomp_pm: need m, n >= 1");
  PMExpansion e;
  e.m = m;
  e.n = n;
  e.a.resize(static_cast<size_t>(m));
  e.b.resize(static_cast<size_t>(n));
  for (long k = 0; k < m; ++k)
    e.a[static_cast<size_t>(m - k - 1)] = Rational(binomial(n + k - 1, k)) * pow2(-(n + k));
  for (long i = 0; i < n; ++i)
    e.b[static_cast<size_t>(n - i - 1)] = Rational(binomial(m + i - 1, i)) * pow2(-(m + i));
  return e;
}

bool pm_recombine_check(const PMExpansion& e, const Rational& z) {
  if (z == Rational(1) || z == Rational(-1))
    throw std::invalid_argument("pm_recombine_check: z must avoid +-1");
  const Rational u = Rational(1) - z, v = Rational(1) + z;
  const Rational lhs = (u.pow(e.m) * v.pow(e.n)).inverse();
  Rational rhs(0);
  Rational up = u.inverse(), upow = up;
  for (size_t j = 0; j < e.a.size(); ++j, upow *= up) rhs += e.a[j] * upow;
  Rational vp = v.inverse(), vpow = vp;
  for (size_t i = 0; i < e.b.size(); ++i, vpow *= vp) rhs += e.b[i] * vpow;
  return lhs == rhs;
}

Rational AlphaExpansion::weight_sum() const {
  Rational s(1);
  for (const auto& al : alphas) s += Rational(2) * al.abs();
  return s;
}

bool AlphaExpansion::coarse_bound_holds() const { return weight_sum() <= pow2(k); }

bool AlphaExpansion::improved_bound_holds() const {
  return weight_sum() <= Rational(2) * Rational(4, 3).pow(k);
}

AlphaExpansion decomp_alphas(long k) {
  if (k < 1) throw std::invalid_argument("decomp_alphas: need k >= 1");
  AlphaExpansion e;
  e.k = k;
  e.constant = (k % 2 != 0) ? Rational(-1) : Rational(1);
  e.alphas.assign(static_cast<size_t>(k), Rational(0));
  // z^{2k} = ((z^2-1)+1)^k = sum_j C(k,j) (-1)^j (1-z^2)^j; dividing by
  // (1-z^2)^k leaves, for each j < k, the weight (-1)^j C(k,j) on
  // 1/((1-z)(1+z))^{k-j}, which decomp_pm splits symmetrically.
  for (long j = 0; j < k; ++j) {
    const long q = k - j;
    const PMExpansion pm = decomp_pm(q, q);
    Rational w(binomial(k, j));
    if (j % 2 != 0) w = -w;
    for (long u = 1; u <= q; ++u) e.alphas[static_cast<size_t>(u - 1)] += w * pm.a[static_cast<size_t>(u - 1)];
  }
  return e;
}

bool alpha_vs_c_check(long k) {
  const AlphaExpansion e = decomp_alphas(k);
  for (long j = 0; j < k; ++j) {
    const Rational& alpha = e.alphas[static_cast<size_t>(k - j - 1)];
    Rational signed_alpha = (j % 2 != 0) ? -alpha : alpha;
    if (signed_alpha.sign() <= 0) return false;            // (-1)^j alpha_{k-j} > 0
    if (signed_alpha != coeff_closed(k, j)) return false;  // alpha_{k-j} = (-1)^j c_j^k
  }
  return true;
}

bool alpha_series_check(long k) {
  const AlphaExpansion e = decomp_alphas(k);
  const long order = 4 * k + 4;
  const TruncatedSeries z = TruncatedSeries::indeterminate(order);
  const TruncatedSeries one = TruncatedSeries::constant(Rational(1), order);
  const TruncatedSeries lhs =
      z.pow(2 * static_cast<unsigned long>(k)) *
      (one - z * z).pow(static_cast<unsigned long>(k)).reciprocal();
  TruncatedSeries rhs = TruncatedSeries::constant(e.constant, order);
  const TruncatedSeries inv_m = (one - z).reciprocal();
  const TruncatedSeries inv_p = (one + z).reciprocal();
  TruncatedSeries pm = inv_m, pp = inv_p;
  for (long j = 1; j <= k; ++j) {
    rhs += (pm + pp).scaled(e.alphas[static_cast<size_t>(j - 1)]);
    if (j < k) {
      pm = pm * inv_m;
      pp = pp * inv_p;
    }
  }
  return lhs == rhs;
}

std::complex<double> QuadPoleExpansion::pole() const {
  return {0.0, 1.0 / std::sqrt(C.to_double())};
}

std::complex<double> QuadPoleExpansion::render(const FieldElem& e) const {
  static const std::complex<double> phase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const double mag = std::pow(C.to_double(), -static_cast<double>(e.p) / 2.0);
  return e.q.to_double() * mag * phase[((e.p % 4) + 4) % 4];
}

QuadPoleExpansion decomp_quad_pole(long k, const Rational& C, const Rational& delta) {
  if (k < 1) throw std::invalid_argument("decomp_quad_pole: need k >= 1");
  if (delta.sign() <= 0 || delta >= Rational(1))
    throw std::invalid_argument("decomp_quad_pole: delta must satisfy 0 < delta < 1");
  if (C <= delta || C >= delta.inverse())
    throw std::invalid_argument("decomp_quad_pole: C must lie in (delta, 1/delta)");
  const AlphaExpansion al = decomp_alphas(k);
  QuadPoleExpansion e;
  e.k = k;
  e.C = C;
  e.delta = delta;
  e.constant = C.inverse().pow(k);
  e.A.reserve(static_cast<size_t>(k));
  e.B.reserve(static_cast<size_t>(k));
  for (long v = 1; v <= k; ++v) {
    const Rational& alpha = al.alphas[static_cast<size_t>(v - 1)];
    const Rational qa = (v % 2 != 0) ? -alpha : alpha;
    e.A.push_back(FieldElem{qa, 2 * k + v});
    e.B.push_back(FieldElem{alpha, 2 * k + v});
  }
  return e;
}

namespace {

// |q w^p| = |q| C^{-p/2}; split by parity of p into the rational part and
// the C^{-1/2} multiple.
void accumulate_abs(const FieldElem& e, const Rational& inv_c, Rational& x, Rational& y) {
  const Rational mag = e.q.abs();
  if (e.p % 2 == 0)
    x += mag * inv_c.pow(e.p / 2);
  else
    y += mag * inv_c.pow((e.p - 1) / 2);
}

}  // namespace

bool QuadPoleExpansion::coefficient_bound_holds() const {
  const Rational inv_c = C.inverse();
  const Rational inv_d = delta.inverse();
  // LHS = X + Y C^{-1/2}
  Rational x = constant, y(0);
  for (const auto& e : A) accumulate_abs(e, inv_c, x, y);
  for (const auto& e : B) accumulate_abs(e, inv_c, x, y);
  // RHS = 2^k delta^{-3k/2}: rational for even k, (rational) delta^{-1/2}
  // for odd k.
  if (k % 2 == 0) {
    const Rational r0 = pow2(k) * inv_d.pow(3 * k / 2);
    const Rational t = r0 - x;
    if (t.sign() < 0) return false;
    return y * y * inv_c <= t * t;
  }
  const Rational r1 = pow2(k) * inv_d.pow((3 * k - 1) / 2);
  // X + Y u <= R1 w  <=>  2XY u <= R1^2/delta - X^2 - Y^2/C =: A2
  const Rational a2 = r1 * r1 * inv_d - x * x - y * y * inv_c;
  if (a2.sign() < 0) return false;
  if (x.is_zero() || y.is_zero()) return true;
  return Rational(4) * x * x * y * y * inv_c <= a2 * a2;
}

double quad_pole_recombine_numeric(const QuadPoleExpansion& e, int samples, uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  const double cd = e.C.to_double();
  const std::complex<double> zc = e.pole();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double z = dist(eng);
    const double lhs = std::pow(z * z, e.k) / std::pow(1.0 + cd * z * z, e.k);
    std::complex<double> rhs = e.constant.to_double();
    for (long v = 1; v <= e.k; ++v) {
      rhs += e.render(e.A[static_cast<size_t>(v - 1)]) / std::pow(z - zc, v);
      rhs += e.render(e.B[static_cast<size_t>(v - 1)]) / std::pow(z + zc, v);
    }
    worst = std::max(worst, std::abs(rhs - lhs));
  }
  return worst;
}

namespace {

// Arithmetic in Q[w]/(w^2 - w2), w2 = -1/C.
struct Qw {
  Rational a, b;  // a + b w
};

Qw qw_mul(const Qw& x, const Qw& y, const Rational& w2) {
  return {x.a * y.a + x.b * y.b * w2, x.a * y.b + x.b * y.a};
}

Qw qw_pow_of_w(long p, const Rational& w2) {
  if (p % 2 == 0) return {w2.pow(p / 2), Rational(0)};
  return {Rational(0), w2.pow((p - 1) / 2)};
}

using QwPoly = std::vector<Qw>;  // coefficient of z^i at index i

QwPoly poly_mul(const QwPoly& f, const QwPoly& g, const Rational& w2) {
  QwPoly r(f.size() + g.size() - 1, Qw{Rational(0), Rational(0)});
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) {
      const Qw p = qw_mul(f[i], g[j], w2);
      r[i + j].a += p.a;
      r[i + j].b += p.b;
    }
  return r;
}

QwPoly poly_pow(QwPoly base, long e, const Rational& w2) {
  QwPoly r{Qw{Rational(1), Rational(0)}};
  while (e > 0) {
    if (e & 1L) r = poly_mul(r, base, w2);
    e >>= 1L;
    if (e > 0) base = poly_mul(base, base, w2);
  }
  return r;
}

void poly_add_scaled(QwPoly& acc, const QwPoly& f, const Qw& c, const Rational& w2) {
  if (acc.size() < f.size()) acc.resize(f.size(), Qw{Rational(0), Rational(0)});
  for (size_t i = 0; i < f.size(); ++i) {
    const Qw p = qw_mul(f[i], c, w2);
    acc[i].a += p.a;
    acc[i].b += p.b;
  }
}

}  // namespace

bool quad_pole_symbolic_check(const QuadPoleExpansion& e) {
  const Rational w2 = -e.C.inverse();  // w^2 = -1/C
  const Qw one{Rational(1), Rational(0)};
  const QwPoly z_minus_w{Qw{Rational(0), Rational(-1)}, one};  // z - w
  const QwPoly z_plus_w{Qw{Rational(0), Rational(1)}, one};    // z + w
  // Common denominator (z-w)^k (z+w)^k = (z^2 + 1/C)^k; the LHS numerator
  // over it is z^{2k}/C^k.
  QwPoly rhs{Qw{Rational(0), Rational(0)}};
  const QwPoly denom = poly_pow(poly_mul(z_minus_w, z_plus_w, w2), e.k, w2);
  poly_add_scaled(rhs, denom, Qw{e.constant, Rational(0)}, w2);
  for (long v = 1; v <= e.k; ++v) {
    const FieldElem& av = e.A[static_cast<size_t>(v - 1)];
    const FieldElem& bv = e.B[static_cast<size_t>(v - 1)];
    const Qw ac = qw_mul(Qw{av.q, Rational(0)}, qw_pow_of_w(av.p, w2), w2);
    const Qw bc = qw_mul(Qw{bv.q, Rational(0)}, qw_pow_of_w(bv.p, w2), w2);
    const QwPoly fa = poly_mul(poly_pow(z_minus_w, e.k - v, w2), poly_pow(z_plus_w, e.k, w2), w2);
    const QwPoly fb = poly_mul(poly_pow(z_plus_w, e.k - v, w2), poly_pow(z_minus_w, e.k, w2), w2);
    poly_add_scaled(rhs, fa, ac, w2);
    poly_add_scaled(rhs, fb, bc, w2);
  }
  const Rational lead = e.C.inverse().pow(e.k);
  if (static_cast<long>(rhs.size()) < 2 * e.k + 1) return false;
  for (size_t i = 0; i < rhs.size(); ++i) {
    const Rational want_a = (static_cast<long>(i) == 2 * e.k) ? lead : Rational(0);
    if (rhs[i].a != want_a || !rhs[i].b.is_zero()) return false;
  }
  return true;
}

}  // namespace polefrac

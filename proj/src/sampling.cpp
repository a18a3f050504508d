#include "polefrac/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace polefrac {
namespace sampling {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_identity(long d) {
  Mat m(d, std::vector<Rational>(d, Rational(0)));
  for (long i = 0; i < d; ++i) m[i][i] = Rational(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  long d = static_cast<long>(a.size());
  Mat out(d, std::vector<Rational>(d, Rational(0)));
  for (long i = 0; i < d; ++i)
    for (long k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (long j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Gauss-Jordan inverse; inputs here are I + S with S skew, which is
// always invertible, but keep the guard for safety.
Mat mat_inverse(Mat m) {
  long d = static_cast<long>(m.size());
  Mat inv = mat_identity(d);
  for (long col = 0; col < d; ++col) {
    long pivot = -1;
    for (long r = col; r < d; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale = m[col][col].inverse();
    for (long j = 0; j < d; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (long r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (long j = 0; j < d; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Mat mat_transpose(const Mat& a) {
  long d = static_cast<long>(a.size());
  Mat out(d, std::vector<Rational>(d, Rational(0)));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) out[j][i] = a[i][j];
  return out;
}

}  // namespace

Rational random_rational(std::mt19937_64& eng, const Rational& lo,
                         const Rational& hi, long grid) {
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  std::uniform_int_distribution<long> dist(0, grid);
  return lo + (hi - lo) * Rational(dist(eng), grid);
}

std::vector<Rational> random_point(std::mt19937_64& eng, long d,
                                   const Rational& lo, const Rational& hi,
                                   long grid) {
  std::vector<Rational> x;
  x.reserve(d);
  for (long i = 0; i < d; ++i) x.push_back(random_rational(eng, lo, hi, grid));
  return x;
}

SymMatrix random_window_matrix(std::mt19937_64& eng, long d,
                               const Rational& delta) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (!(Rational(0) < delta && delta < Rational(1)))
    throw std::invalid_argument("delta must lie in (0, 1)");

  // Eigenvalues delta + u * (1/delta - delta) with u in [0.02, 0.98].
  Rational width = delta.inverse() - delta;
  std::uniform_int_distribution<long> udist(20, 980);
  std::vector<Rational> eig;
  eig.reserve(d);
  for (long i = 0; i < d; ++i)
    eig.push_back(delta + width * Rational(udist(eng), 1000));

  if (d == 1) {
    SymMatrix c(1);
    c.set(0, 0, eig[0]);
    return c;
  }

  // Cayley rotation Q = (I - S)(I + S)^{-1}, S skew with small entries.
  std::uniform_int_distribution<long> sdist(-64, 64);
  Mat i_minus_s = mat_identity(d);
  Mat i_plus_s = mat_identity(d);
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j) {
      Rational s(sdist(eng), 64);
      i_minus_s[i][j] = -s;
      i_minus_s[j][i] = s;
      i_plus_s[i][j] = s;
      i_plus_s[j][i] = -s;
    }
  Mat q = mat_mul(i_minus_s, mat_inverse(i_plus_s));

  Mat lam(d, std::vector<Rational>(d, Rational(0)));
  for (long i = 0; i < d; ++i) lam[i][i] = eig[i];
  Mat c = mat_mul(mat_mul(q, lam), mat_transpose(q));

  std::vector<std::vector<Rational>> rows(d);
  for (long i = 0; i < d; ++i) rows[i] = c[i];
  return SymMatrix::from_rows(rows);
}

Monomial random_monomial(std::mt19937_64& eng, long degree, long d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<long> exps(d, 0);
  std::uniform_int_distribution<long> slot(0, d - 1);
  for (long u = 0; u < degree; ++u) ++exps[slot(eng)];
  return Monomial{exps};
}

ClassTerm random_class_term(std::mt19937_64& eng, long d, long r,
                            const Rational& delta, long max_distinct) {
  if (r < 1) throw std::invalid_argument("order must be positive");
  if (max_distinct < 1)
    throw std::invalid_argument("max_distinct must be positive");
  long pool_size = std::min(max_distinct, r);
  std::vector<SymMatrix> pool;
  pool.reserve(pool_size);
  for (long i = 0; i < pool_size; ++i)
    pool.push_back(random_window_matrix(eng, d, delta));
  std::uniform_int_distribution<long> pick(0, pool_size - 1);
  std::vector<SymMatrix> denoms;
  denoms.reserve(r);
  for (long s = 0; s < r; ++s) denoms.push_back(pool[pick(eng)]);
  return ClassTerm(random_monomial(eng, 2 * r, d), denoms, delta);
}

SampledPole random_meromorphic_sum(std::mt19937_64& eng) {
  std::uniform_int_distribution<long> ygrid(50, 200);
  std::uniform_int_distribution<long> orddist(1, 3);
  std::uniform_real_distribution<double> mag_exp(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
  auto amplitude = [&]() {
    double m = std::pow(10.0, mag_exp(eng));
    double t = phase(eng);
    return Complex(m * std::cos(t), m * std::sin(t));
  };

  SampledPole sp;
  sp.y = static_cast<double>(ygrid(eng)) / 100.0;
  sp.order = orddist(eng);
  Complex pole(0.0, sp.y);
  for (long v = sp.order; v >= 1; --v) {
    Complex a = amplitude();
    sp.truth.push_back(a);
    sp.sum.terms.push_back(PoleTerm{a, pole, v});
  }

  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> offgrid(10, 100);
  int n_extra = extra(eng);
  for (int e = 0; e < n_extra; ++e) {
    double off = static_cast<double>(offgrid(eng)) / 100.0;
    double sign = coin(eng) ? 1.0 : -1.0;
    Complex z0 = coin(eng) ? Complex(0.0, sp.y + sign * off)
                           : Complex(sign * off, sp.y);
    sp.sum.terms.push_back(PoleTerm{amplitude(), z0, orddist(eng)});
  }
  return sp;
}

}  // namespace sampling
}  // namespace polefrac

#include "polefrac/quadform.hpp"

#include <stdexcept>

namespace polefrac {

SymMatrix::SymMatrix(long d) : d_(d) {
  if (d <= 0) throw std::invalid_argument("matrix: dimension must be positive");
  a_.assign(static_cast<size_t>(d) * static_cast<size_t>(d), Rational(0));
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const long d = static_cast<long>(rows.size());
  SymMatrix m(d);
  for (long i = 0; i < d; ++i) {
    if (static_cast<long>(rows[static_cast<size_t>(i)].size()) != d)
      throw std::invalid_argument("matrix: ragged rows");
    for (long j = 0; j < d; ++j)
      m.a_[static_cast<size_t>(i * d + j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j)
      if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("matrix: not symmetric");
  return m;
}

SymMatrix SymMatrix::identity(long d) {
  SymMatrix m(d);
  for (long i = 0; i < d; ++i) m.set(i, i, Rational(1));
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<Rational>& diag) {
  SymMatrix m(static_cast<long>(diag.size()));
  for (long i = 0; i < m.dim(); ++i) m.set(i, i, diag[static_cast<size_t>(i)]);
  return m;
}

const Rational& SymMatrix::at(long i, long j) const {
  if (i < 0 || j < 0 || i >= d_ || j >= d_) throw std::out_of_range("matrix: index");
  return a_[static_cast<size_t>(i * d_ + j)];
}

void SymMatrix::set(long i, long j, const Rational& v) {
  if (i < 0 || j < 0 || i >= d_ || j >= d_) throw std::out_of_range("matrix: index");
  a_[static_cast<size_t>(i * d_ + j)] = v;
  a_[static_cast<size_t>(j * d_ + i)] = v;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (d_ != o.d_) throw std::invalid_argument("matrix: dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (d_ != o.d_) throw std::invalid_argument("matrix: dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

SymMatrix operator*(const Rational& c, SymMatrix m) {
  for (auto& v : m.a_) v *= c;
  return m;
}

Rational quadform_eval(const SymMatrix& C, const std::vector<Rational>& x) {
  const long d = C.dim();
  if (static_cast<long>(x.size()) != d) throw std::invalid_argument("quadform: dimension mismatch");
  Rational acc(0);
  for (long i = 0; i < d; ++i) {
    acc += C.at(i, i) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    for (long j = i + 1; j < d; ++j)
      acc += Rational(2) * C.at(i, j) * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
  }
  return acc;
}

bool is_positive_definite(const SymMatrix& C) {
  const long d = C.dim();
  // Scale by the lcm L of all denominators: leading minors pick up the
  // positive factor L^k, so their signs are unchanged.
  Integer lcm(1);
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      Integer den = C.at(i, j).den();
      Integer g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
  std::vector<Integer> m(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      const Rational scaled = Rational(lcm) * C.at(i, j);
      m[static_cast<size_t>(i * d + j)] = scaled.num();  // den is 1 by construction
    }
  // Bareiss fraction-free elimination. After step k the (k,k) entry is the
  // k-th leading principal minor of the scaled matrix; stop at the first
  // non-positive one (strict positivity is required, so a zero pivot
  // already decides the answer and elimination never divides by zero).
  Integer prev(1);
  auto e = [&](long i, long j) -> Integer& { return m[static_cast<size_t>(i * d + j)]; };
  for (long k = 0; k < d; ++k) {
    if (sgn(e(k, k)) <= 0) return false;
    for (long i = k + 1; i < d; ++i)
      for (long j = k + 1; j < d; ++j) {
        Integer t = e(i, j) * e(k, k) - e(i, k) * e(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        e(i, j) = t;
      }
    prev = e(k, k);
  }
  return true;
}

bool in_window(const SymMatrix& C, const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1))
    throw std::invalid_argument("window: delta must satisfy 0 < delta < 1");
  const SymMatrix I = SymMatrix::identity(C.dim());
  return is_positive_definite(C - delta * I) && is_positive_definite(delta.inverse() * I - C);
}

std::pair<EigenBracket, EigenBracket> eigen_window(const SymMatrix& C, const Rational& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("eigen_window: tol must be positive");
  if (!is_positive_definite(C)) throw std::domain_error("eigen_window: matrix not positive definite");
  const long d = C.dim();
  const SymMatrix I = SymMatrix::identity(d);

  Rational gersh_hi = C.at(0, 0);
  for (long i = 0; i < d; ++i) {
    Rational row = C.at(i, i);
    for (long j = 0; j < d; ++j)
      if (j != i) row += C.at(i, j).abs();
    if (row > gersh_hi) gersh_hi = row;
  }

  // lambda_min: PD(C - tI) holds exactly for t < lambda_min.
  Rational lo(0), hi = gersh_hi + Rational(1);
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (is_positive_definite(C - mid * I))
      lo = mid;
    else
      hi = mid;
  }
  EigenBracket min_bracket{lo, hi};

  // lambda_max: PD(tI - C) holds exactly for t > lambda_max.
  lo = Rational(0);
  hi = gersh_hi + Rational(1);
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (is_positive_definite(mid * I - C))
      hi = mid;
    else
      lo = mid;
  }
  EigenBracket max_bracket{lo, hi};
  return {min_bracket, max_bracket};
}

}  // namespace polefrac

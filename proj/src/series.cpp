#include "polefrac/series.hpp"

#include <stdexcept>

namespace polefrac {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series: order mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(long order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series: empty coefficient list");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, long order) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::indeterminate(long order) {
  if (order < 1) throw std::invalid_argument("series: order must be >= 1 for z");
  TruncatedSeries s(order);
  s.c_[1] = Rational(1);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries r(a.order());
  const size_t n = a.c_.size();
  for (size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (c_[0].is_zero()) throw std::domain_error("series: reciprocal needs nonzero constant term");
  TruncatedSeries r(order());
  const Rational inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (size_t k = 1; k < c_.size(); ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries r = *this;
  for (auto& v : r.c_) v *= c;
  return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned long n) const {
  TruncatedSeries result = constant(Rational(1), order());
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace polefrac

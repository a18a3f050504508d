#include "polefrac/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace polefrac {

namespace {

void require_nonzero_den(const mpq_class& q) {
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
  require_nonzero_den(v_);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  // Trim surrounding whitespace, then insist on [+-]?digits(/digits)?.
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;  // need digits after the slash too
    } else {
      throw std::invalid_argument("rational: malformed '" + std::string(s) + "'");
    }
  }
  if (!digits) throw std::invalid_argument("rational: malformed '" + std::string(s) + "'");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("rational: malformed '" + std::string(s) + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational: zero denominator");
  q.canonicalize();
  Rational r;
  r.v_ = q;
  return r;
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("rational: non-finite double");
  Rational r;
  r.v_ = mpq_class(d);  // exact dyadic representation
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("rational: inverse of zero");
  Rational r;
  r.v_ = mpq_class(v_.get_den(), v_.get_num());
  r.v_.canonicalize();  // fixes denominator sign
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long ue = inv ? static_cast<unsigned long>(-(e + 1)) + 1UL : static_cast<unsigned long>(e);
  if (inv && is_zero()) throw std::domain_error("rational: negative power of zero");
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
  return inv ? Rational(d, n) : Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // C(n,k) = (-1)^k C(k-n-1, k) for n < 0
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 != 0) ? Integer(-r) : r;
}

Rational binomial_general(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational acc(1);
  for (long i = 0; i < k; ++i) acc *= (x - Rational(i)) / Rational(i + 1);
  return acc;
}

Integer int_pow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
  if (base < 0 && e % 2 == 1) r = -r;
  return r;
}

Rational pow2(long e) {
  if (e >= 0) return Rational(int_pow(2, static_cast<unsigned long>(e)));
  return Rational(Integer(1), int_pow(2, static_cast<unsigned long>(-e)));
}

double stirling_ratio(long n) {
  if (n <= 0) throw std::invalid_argument("stirling_ratio: n must be positive");
  Rational central(binomial(2 * n, n), int_pow(2, 2 * static_cast<unsigned long>(n)));
  return central.to_double() * std::sqrt(M_PI * static_cast<double>(n));
}

}  // namespace polefrac

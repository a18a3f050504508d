#pragma once

#include <utility>
#include <vector>

#include "polefrac/rational.hpp"

namespace polefrac {

/// Symmetric rational matrix. Stored dense; set() writes both (i,j) and
/// (j,i) so the invariant cannot be broken after construction.
class SymMatrix {
public:
  explicit SymMatrix(long d);
  /// Builds from full rows; throws if the data is not exactly symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix identity(long d);
  static SymMatrix diagonal(const std::vector<Rational>& diag);

  long dim() const { return d_; }
  const Rational& at(long i, long j) const;
  void set(long i, long j, const Rational& v);

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(const Rational& c, SymMatrix m);

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.d_ == b.d_ && a.a_ == b.a_; }

private:
  long d_;
  std::vector<Rational> a_;  // row-major d x d
};

/// x'Cx, exact.
Rational quadform_eval(const SymMatrix& C, const std::vector<Rational>& x);

/// Sylvester's criterion, decided exactly: scales to an integer matrix and
/// runs fraction-free (Bareiss) elimination; the successive pivots are the
/// leading principal minors, PD iff all are positive.
bool is_positive_definite(const SymMatrix& C);

/// Spectral window test: all eigenvalues in (delta, 1/delta), decided as
/// positive definiteness of C - delta I and (1/delta) I - C.
/// Requires 0 < delta < 1.
bool in_window(const SymMatrix& C, const Rational& delta);

struct EigenBracket {
  Rational lo, hi;  // the eigenvalue lies in (lo, hi]
};

/// Rational brackets of width <= tol for the extreme eigenvalues of a
/// positive definite C, by bisection on t -> PD(C - tI) (resp. PD(tI - C))
/// from Gershgorin starting bounds.
std::pair<EigenBracket, EigenBracket> eigen_window(const SymMatrix& C, const Rational& tol);

}  // namespace polefrac

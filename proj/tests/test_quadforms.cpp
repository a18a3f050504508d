#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "polefrac/quadform.hpp"
#include "polefrac/sampling.hpp"

using polefrac::Rational;
using polefrac::SymMatrix;

namespace {

// plain cofactor-expansion determinant, independent of the library's
// fraction-free elimination
Rational det(const std::vector<std::vector<Rational>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational acc(0);
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    acc += Rational(sign) * m[0][c] * det(minor);
    sign = -sign;
  }
  return acc;
}

bool pd_by_minors(const SymMatrix& a) {
  for (long k = 1; k <= a.dim(); ++k) {
    std::vector<std::vector<Rational>> lead(k, std::vector<Rational>(k));
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) lead[i][j] = a.at(i, j);
    if (!(det(lead) > Rational(0))) return false;
  }
  return true;
}

SymMatrix from(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    std::vector<Rational> rr;
    for (long v : row) rr.push_back(Rational(v));
    r.push_back(rr);
  }
  return SymMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("symmetric matrix construction") {
  SymMatrix a = from({{2, 1}, {1, 2}});
  CHECK(a.dim() == 2);
  CHECK(a.at(0, 1) == Rational(1));
  a.set(0, 1, Rational(5));
  CHECK(a.at(1, 0) == Rational(5));  // mirror entry tracks
  CHECK_THROWS_AS(SymMatrix::from_rows({{Rational(1), Rational(2)},
                                        {Rational(3), Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymMatrix::from_rows({{Rational(1), Rational(2)}}),
                  std::invalid_argument);
  CHECK(SymMatrix::identity(3).at(2, 2) == Rational(1));
  CHECK(SymMatrix::identity(3).at(0, 2) == Rational(0));
}

TEST_CASE("quadratic form evaluation") {
  SymMatrix eye = SymMatrix::identity(3);
  std::vector<Rational> x{Rational(1), Rational(2), Rational(3)};
  CHECK(polefrac::quadform_eval(eye, x) == Rational(14));
  SymMatrix a = from({{1, 2}, {2, 1}});
  std::vector<Rational> y{Rational(1), Rational(1)};
  CHECK(polefrac::quadform_eval(a, y) == Rational(6));  // 1 + 1 + 2*2
  CHECK_THROWS_AS(polefrac::quadform_eval(eye, y), std::invalid_argument);
}

TEST_CASE("positive definiteness on fixed cases") {
  CHECK(polefrac::is_positive_definite(from({{2, 1}, {1, 2}})));
  CHECK_FALSE(polefrac::is_positive_definite(from({{1, 2}, {2, 1}})));
  CHECK_FALSE(polefrac::is_positive_definite(from({{0, 0}, {0, 1}})));
  CHECK_FALSE(polefrac::is_positive_definite(from({{-1, 0}, {0, -1}})));
  CHECK(polefrac::is_positive_definite(from({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})));
  // semidefinite boundary: det = 0
  CHECK_FALSE(polefrac::is_positive_definite(from({{1, 1}, {1, 1}})));
}

TEST_CASE("positive definiteness matches leading minors on random matrices") {
  std::mt19937_64 eng(42);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    long d = 1 + trial % 4;
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (long i = 0; i < d; ++i)
      for (long j = i; j < d; ++j) {
        Rational v(entry(eng), 1 + (trial % 3));
        rows[i][j] = v;
        rows[j][i] = v;
      }
    SymMatrix a = SymMatrix::from_rows(rows);
    CHECK(polefrac::is_positive_definite(a) == pd_by_minors(a));
  }
}

TEST_CASE("window membership") {
  Rational half(1, 2), two_fifths(2, 5);
  SymMatrix a = polefrac::SymMatrix::diagonal({half});
  CHECK(polefrac::in_window(a, two_fifths));    // 2/5 < 1/2 < 5/2
  CHECK_FALSE(polefrac::in_window(a, half));    // boundary is excluded
  CHECK(polefrac::in_window(SymMatrix::identity(3), half));
  SymMatrix big = polefrac::SymMatrix::diagonal({Rational(3)});
  CHECK_FALSE(polefrac::in_window(big, half));  // 3 >= 2
  CHECK_THROWS_AS(polefrac::in_window(a, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(polefrac::in_window(a, Rational(0)), std::invalid_argument);
}

TEST_CASE("eigen window brackets known eigenvalues") {
  SymMatrix a = polefrac::SymMatrix::diagonal({Rational(1), Rational(3)});
  auto [lo, hi] = polefrac::eigen_window(a, Rational(1, 1000));
  CHECK(lo.lo <= Rational(1));
  CHECK(Rational(1) <= lo.hi);
  CHECK(hi.lo <= Rational(3));
  CHECK(Rational(3) <= hi.hi);
  CHECK(lo.hi - lo.lo <= Rational(1, 1000));
  CHECK(hi.hi - hi.lo <= Rational(1, 1000));

  // eigenvalues of [[2,1],[1,2]] are 1 and 3
  SymMatrix b = from({{2, 1}, {1, 2}});
  auto [blo, bhi] = polefrac::eigen_window(b, Rational(1, 4096));
  CHECK(blo.lo <= Rational(1));
  CHECK(Rational(1) <= blo.hi);
  CHECK(bhi.lo <= Rational(3));
  CHECK(Rational(3) <= bhi.hi);
}

TEST_CASE("random window matrices stay inside their window") {
  std::mt19937_64 eng(99);
  for (int trial = 0; trial < 40; ++trial) {
    long d = 1 + trial % 4;
    const Rational delta = (trial % 2) ? Rational(1, 2) : Rational(2, 5);
    SymMatrix c = polefrac::sampling::random_window_matrix(eng, d, delta);
    CHECK(polefrac::in_window(c, delta));
    auto [lo, hi] = polefrac::eigen_window(c, Rational(1, 4096));
    CHECK(delta < lo.hi);
    CHECK(hi.lo < delta.inverse());
  }
}

TEST_CASE("matrix arithmetic") {
  SymMatrix a = from({{2, 1}, {1, 2}});
  SymMatrix b = from({{1, 0}, {0, 1}});
  CHECK((a - b).at(0, 0) == Rational(1));
  CHECK((a + b).at(0, 1) == Rational(1));
  CHECK((Rational(1, 2) * a).at(0, 1) == Rational(1, 2));
  CHECK(a == from({{2, 1}, {1, 2}}));
  CHECK_FALSE(a == b);
}

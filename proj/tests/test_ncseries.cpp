#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hodgecc/ncseries.hpp"
#include "hodgecc/series.hpp"
#include "support/testgen.hpp"

using namespace hodgecc;

TEST_CASE("noncommutative arithmetic") {
  auto X = NCPoly::letter(2, 'X');
  auto Y = NCPoly::letter(2, 'Y');
  auto sq = (X + Y) * (X + Y);
  CHECK(sq.coefficient("XX", false) == 1);
  CHECK(sq.coefficient("XY", false) == 1);
  CHECK(sq.coefficient("YX", false) == 1);
  CHECK(sq.coefficient("YY", false) == 1);
  CHECK(sq.terms().size() == 4);

  // truncation at N = 1 kills the length-2 product
  CHECK((NCPoly::letter(1, 'X') * NCPoly::letter(1, 'Y')).is_zero());

  // eps^2 = 0
  auto eY = NCPoly::letter(3, 'Y', true);
  CHECK((eY * eY).is_zero());

  CHECK_THROWS_AS(NCPoly::letter(1, 'X') + NCPoly::letter(2, 'X'), math_error);
}

TEST_CASE("noncommutative exponential") {
  auto X = NCPoly::letter(2, 'X');
  auto e = nc_exp(X);
  CHECK(e.coefficient("", false) == 1);
  CHECK(e.coefficient("X", false) == 1);
  CHECK(e.coefficient("XX", false) == Rational(1, 2));
  CHECK(e.terms().size() == 3);

  auto X6 = NCPoly::letter(6, 'X');
  CHECK(nc_exp(X6) * nc_exp(-X6) == NCPoly::constant(6, Rational(1)));

  CHECK_THROWS_AS(nc_exp(NCPoly::constant(2, Rational(1)) + X), math_error);

  // an eps-weighted constant is allowed: exp(eps) = 1 + eps
  auto eps = NCPoly::constant(2, Rational(1)).eps_flagged();
  CHECK(nc_exp(eps) == NCPoly::constant(2, Rational(1)) + eps);
}

TEST_CASE("ad series expansion") {
  const SeriesCoeffs one{Rational(1)};
  CHECK(ad_series_apply(one, 3) == NCPoly::letter(3, 'Y'));

  const SeriesCoeffs t{Rational(0), Rational(1)};
  auto xy_minus_yx = ad_series_apply(t, 3);
  CHECK(xy_minus_yx.coefficient("XY", false) == 1);
  CHECK(xy_minus_yx.coefficient("YX", false) == -1);
  CHECK(xy_minus_yx.terms().size() == 2);

  // (1 - e^{-t})/t through degree 2: Y - [X,Y]/2 + [X,[X,Y]]/6
  auto v = ad_series_apply(inv_todd_series(2), 3);
  CHECK(v.coefficient("Y", false) == 1);
  CHECK(v.coefficient("XY", false) == Rational(-1, 2));
  CHECK(v.coefficient("YX", false) == Rational(1, 2));
  CHECK(v.coefficient("XXY", false) == Rational(1, 6));
  CHECK(v.coefficient("XYX", false) == Rational(-2, 6));
  CHECK(v.coefficient("YXX", false) == Rational(1, 6));
}

TEST_CASE("the exponential-derivative identity holds in the free algebra") {
  for (int N = 1; N <= 6; ++N)
    CHECK(dexp_identity_check(N).is_zero());
}

TEST_CASE("flipping the degree-1 coefficient breaks the identity at degree 2") {
  SeriesCoeffs flipped = inv_todd_series(6);
  flipped[1] = Rational(1, 2);
  auto residual = dexp_residual(flipped, 6);
  CHECK_FALSE(residual.is_zero());
  CHECK(residual.coefficient("XY", true) != 0);
}

TEST_CASE("matrix specialization") {
  NilpotentMatrix E12{3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}};
  NilpotentMatrix E23{3, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}};
  CHECK(matrix_dexp_check(E12, E23));

  // X = 0: both sides are 1 + eps Y
  NilpotentMatrix Z{3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
  NilpotentMatrix Y{3, {{0, 2, -1}, {0, 0, 3}, {0, 0, 0}}};
  auto [lhs, rhs] = matrix_dexp_sides(Z, Y);
  CHECK(lhs == rhs);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(lhs[i][j].re == Rational(i == j ? 1 : 0));
      CHECK(lhs[i][j].eps == Y.entries[i][j]);
    }

  NilpotentMatrix bad{2, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(matrix_dexp_check(bad, bad), math_error);
}

TEST_CASE("random nilpotent pairs satisfy the identity exactly") {
  testgen::Rng rng(333);
  for (int i = 0; i < 60; ++i) {
    const int n = 3 + i % 3;
    auto X = testgen::random_strict_upper(rng, n);
    auto Y = testgen::random_strict_upper(rng, n);
    CHECK(matrix_dexp_check(X, Y));
  }
}

TEST_CASE("the word residual projects to zero under matrix substitution") {
  auto residual = dexp_identity_check(6);
  REQUIRE(residual.is_zero());
  // substitute anyway: evaluation of the zero polynomial vanishes, and a
  // nonzero control does not
  testgen::Rng rng(444);
  for (int i = 0; i < 10; ++i) {
    const int n = 3 + i % 2;
    auto A = testgen::random_strict_upper(rng, n);
    auto B = testgen::random_strict_upper(rng, n);
    auto value = nc_evaluate(residual, A, B);
    for (const auto &row : value)
      for (const auto &v : row) {
        CHECK(v.re == 0);
        CHECK(v.eps == 0);
      }
  }

  SeriesCoeffs flipped = inv_todd_series(6);
  flipped[1] = Rational(1, 2);
  auto control = dexp_residual(flipped, 6);
  NilpotentMatrix E12{3, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}};
  NilpotentMatrix E23{3, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}};
  auto value = nc_evaluate(control, E12, E23);
  bool nonzero = false;
  for (const auto &row : value)
    for (const auto &v : row)
      if (v.re != 0 || v.eps != 0)
        nonzero = true;
  CHECK(nonzero);
}

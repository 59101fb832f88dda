#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hodgecc/equivariant.hpp"
#include "support/testgen.hpp"

using namespace hodgecc;

namespace {

FixedComponent point_component(const FieldPtr &field,
                               std::vector<std::pair<Scalar, long>> lambdas) {
  VarietyModel pt = multiprojective({0}, field);
  EigenLineSum conormal;
  for (auto &[lambda, mult] : lambdas)
    conormal.push_back(EigenLine{lambda, GradedElement(pt.presentation), mult});
  return FixedComponent{std::move(pt), std::move(conormal)};
}

} // namespace

TEST_CASE("equivariant chern character on a fixed component") {
  auto q = NumberField::rationals();
  VarietyModel P1 = multiprojective({1});
  auto h = GradedElement::generator(P1.presentation, 0);

  // single summand (mu, k h, 1) -> mu (1 + k h)
  EquivariantBundle B{FixedComponent{P1, {}},
                      {EigenLine{Scalar(5), h.scaled(Rational(3)), 1}}};
  CHECK(equivariant_ch(B) ==
        (GradedElement::unit(P1.presentation) + h.scaled(Rational(3)))
            .scaled(Rational(5)));

  // on a point: ch_0(E, t) = Tr(t)
  FixedComponent pt = point_component(q, {});
  EquivariantBundle Bpt{pt,
                        {EigenLine{Scalar(2), GradedElement(pt.F.presentation), 1},
                         EigenLine{Scalar(7), GradedElement(pt.F.presentation), 1}}};
  CHECK(equivariant_ch(Bpt) ==
        GradedElement::unit(pt.F.presentation).scaled(Rational(9)));

  // all eigenvalues 1: reduces to the classical chern character
  auto P2 = multiprojective({2});
  auto h2 = GradedElement::generator(P2.presentation, 0);
  EquivariantBundle triv{FixedComponent{P2, {}},
                         {EigenLine{Scalar(1), h2.scaled(Rational(2)), 1},
                          EigenLine{Scalar(1), h2.scaled(Rational(-1)), 1}}};
  auto split = bundle_sum(line_bundle(P2, {2}), line_bundle(P2, {-1}));
  CHECK(equivariant_ch(triv) == chern_character(split));
}

TEST_CASE("equivariant euler classes") {
  auto q = NumberField::rationals();

  FixedComponent pt = point_component(q, {{Scalar(Rational(3)), 1}});
  CHECK(equivariant_euler(pt) ==
        GradedElement::unit(pt.F.presentation).scaled(Rational(-2)));

  // F = P1 in P2 with conormal (alpha, -h, 1): 1 - alpha e^{-h}
  VarietyModel P1 = multiprojective({1});
  auto h = GradedElement::generator(P1.presentation, 0);
  FixedComponent C{P1, {EigenLine{Scalar(4), -h, 1}}};
  GradedElement expected =
      GradedElement::unit(P1.presentation).scaled(Rational(-3)) +
      h.scaled(Rational(4));
  CHECK(equivariant_euler(C) == expected);

  FixedComponent empty{P1, {}};
  CHECK(equivariant_euler(empty) == GradedElement::unit(P1.presentation));
}

TEST_CASE("localization criterion") {
  auto q = NumberField::rationals();
  CHECK(localization_invertible(point_component(q, {{Scalar(2), 1}})));
  CHECK_FALSE(localization_invertible(point_component(q, {{Scalar(1), 1}})));
  CHECK_FALSE(localization_invertible(
      point_component(q, {{Scalar(1), 1}, {Scalar(2), 1}})));
}

TEST_CASE("diagonal fixed data on P^1") {
  const Scalar alpha(Rational(5));
  auto data = diagonal_pn_fixed_data(1, {{Scalar(1), 1}, {alpha, 1}}, 3);
  REQUIRE(data.size() == 2);

  const auto &[C0, B0] = data[0];
  CHECK(C0.F.dimension == 0);
  REQUIRE(C0.conormal.size() == 1);
  CHECK(C0.conormal[0].eigenvalue == alpha);
  CHECK(C0.conormal[0].multiplicity == 1);
  REQUIRE(B0.lines.size() == 1);
  CHECK(B0.lines[0].eigenvalue == Scalar(1));

  const auto &[C1, B1] = data[1];
  CHECK(C1.conormal[0].eigenvalue == alpha.inverse());
  CHECK(B1.lines[0].eigenvalue == alpha.pow(3));
}

TEST_CASE("diagonal fixed data on P^2 with a 2-block") {
  auto data =
      diagonal_pn_fixed_data(2, {{Scalar(1), 2}, {Scalar(2), 1}}, 1);
  REQUIRE(data.size() == 2);

  const auto &[C0, B0] = data[0];
  CHECK(C0.F.dimension == 1); // P^1
  REQUIRE(C0.conormal.size() == 1);
  CHECK(C0.conormal[0].eigenvalue == Scalar(2));
  CHECK(C0.conormal[0].multiplicity == 1);
  CHECK(C0.conormal[0].c1 ==
        -GradedElement::generator(C0.F.presentation, 0));
  CHECK(B0.lines[0].eigenvalue == Scalar(1));

  const auto &[C1, B1] = data[1];
  CHECK(C1.F.dimension == 0);
  REQUIRE(C1.conormal.size() == 1);
  CHECK(C1.conormal[0].eigenvalue == Scalar(Rational(1, 2)));
  CHECK(C1.conormal[0].multiplicity == 2);
  CHECK(B1.lines[0].eigenvalue == Scalar(2));
}

TEST_CASE("scalar action fixes everything") {
  const Scalar alpha(Rational(3));
  auto data = diagonal_pn_fixed_data(2, {{alpha, 3}}, 2);
  REQUIRE(data.size() == 1);
  CHECK(data[0].first.F.dimension == 2);
  CHECK(data[0].first.conormal.empty());
  CHECK(data[0].second.lines[0].eigenvalue == alpha.pow(2));
}

TEST_CASE("diagonal fixed data rejects malformed blocks") {
  CHECK_THROWS_AS(diagonal_pn_fixed_data(2, {{Scalar(1), 1}, {Scalar(2), 1}}, 0),
                  math_error); // multiplicities sum to 2, not 3
  CHECK_THROWS_AS(diagonal_pn_fixed_data(1, {{Scalar(2), 1}, {Scalar(2), 1}}, 0),
                  math_error); // repeated eigenvalue
  CHECK_THROWS_AS(diagonal_pn_fixed_data(1, {{Scalar(0), 2}}, 0), math_error);
}

TEST_CASE("degree-0 invariants of the equivariant classes") {
  testgen::Rng rng(111);
  auto f4 = cyclotomic_field(4);
  VarietyModel P2 = multiprojective({2}, f4);
  auto h = GradedElement::generator(P2.presentation, 0);
  std::uniform_int_distribution<int> lines(0, 3);
  std::uniform_int_distribution<long> mult(1, 3);
  std::uniform_int_distribution<long> small(-2, 2);

  for (int i = 0; i < 100; ++i) {
    EigenLineSum conormal;
    Scalar det(Rational(1), f4);
    const int nc = lines(rng);
    for (int j = 0; j < nc; ++j) {
      Scalar lambda = testgen::random_nonzero_scalar(rng, f4);
      const long m = mult(rng);
      conormal.push_back(
          EigenLine{lambda, h.scaled(Rational(small(rng))), m});
      det = det * (Scalar(Rational(1), f4) - lambda).pow(m);
    }
    FixedComponent C{P2, conormal};
    CHECK(equivariant_euler(C).constant_term() == det);
    CHECK(localization_invertible(C) == !det.is_zero());

    EigenLineSum bl;
    Scalar trace(Rational(0), f4);
    const int nb = 1 + lines(rng);
    for (int j = 0; j < nb; ++j) {
      Scalar mu = testgen::random_nonzero_scalar(rng, f4);
      const long m = mult(rng);
      bl.push_back(EigenLine{mu, h.scaled(Rational(small(rng))), m});
      trace = trace + mu * Scalar(Rational(m), f4);
    }
    EquivariantBundle B{C, bl};
    CHECK(equivariant_ch(B).constant_term() == trace);
  }
}

TEST_CASE("component dimensions complement the conormal rank") {
  testgen::Rng rng(222);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    // random composition of n + 1
    std::vector<std::pair<Scalar, long>> blocks;
    long left = n + 1;
    long value = 2;
    while (left > 0) {
      const long m = std::uniform_int_distribution<long>(1, left)(rng);
      blocks.emplace_back(Scalar(Rational(value)), m);
      ++value;
      left -= m;
    }
    for (const auto &[C, B] : diagonal_pn_fixed_data(n, blocks, 1))
      CHECK(C.F.dimension + eigen_rank(C.conormal) == n);
  }
}

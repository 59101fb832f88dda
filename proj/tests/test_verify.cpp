#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hodgecc/verify.hpp"
#include "support/testgen.hpp"

using namespace hodgecc;

TEST_CASE("euler characteristic oracle") {
  auto P2 = multiprojective({2});
  auto P1 = multiprojective({1});
  CHECK(euler_char_oracle(P2, {{1}}) == Scalar(3));
  CHECK(euler_char_oracle(P1, {{-1}}) == Scalar(0));
  CHECK(euler_char_oracle(P2, {{-3}}) == Scalar(1));
  CHECK(euler_char_oracle(multiprojective({1, 1}), {{1, 1}}) == Scalar(4));
  CHECK(euler_char_oracle(multiprojective({}), {{}}) == Scalar(1));
}

TEST_CASE("hirzebruch-riemann-roch spot checks") {
  CHECK(hrr_check(multiprojective({2}), {{1}}).passed());
  auto r = hrr_check(multiprojective({1}), {{-1}});
  CHECK(r.passed());
  CHECK(r.lhs == json("0"));
  CHECK(hrr_check(multiprojective({}), {{}}).passed());
  // sums of line bundles
  CHECK(hrr_check(multiprojective({1, 2}), {{1, -2}, {0, 3}, {-1, 0}}).passed());
}

TEST_CASE("grr along projections") {
  auto P11 = multiprojective({1, 1});
  auto r = grr_projection_check(P11, {0}, {1, 1});
  CHECK(r.passed());
  // 2 + 4h on both sides
  json expected = element_to_json(
      GradedElement::unit(multiprojective({1}).presentation).scaled(Rational(2)) +
      GradedElement::generator(multiprojective({1}).presentation, 0)
          .scaled(Rational(4)));
  CHECK(canonical_dump(r.lhs) == canonical_dump(expected));

  auto zero = grr_projection_check(P11, {0}, {2, -1});
  CHECK(zero.passed());
  CHECK(zero.lhs == element_to_json(GradedElement(
                        multiprojective({1}).presentation)));

  auto td = grr_projection_check(P11, {0}, {0, 0});
  CHECK(td.passed());
  CHECK(canonical_dump(td.lhs) ==
        canonical_dump(element_to_json(todd_class(multiprojective({1})))));

  // keeping everything is the identity case
  CHECK(grr_projection_check(P11, {0, 1}, {2, 3}).passed());
}

TEST_CASE("grr along linear embeddings") {
  auto r = grr_embedding_check(1, 2, 0);
  CHECK(r.passed());
  auto P2 = multiprojective({2});
  GradedElement expected(P2.presentation);
  expected.add_term({1}, Scalar(Rational(1)));
  expected.add_term({2}, Scalar(Rational(1)));
  CHECK(canonical_dump(r.lhs) == canonical_dump(element_to_json(expected)));

  auto r01 = grr_embedding_check(0, 1, 0);
  CHECK(r01.passed());
  CHECK(canonical_dump(r01.lhs) ==
        canonical_dump(element_to_json(GradedElement::generator(
            multiprojective({1}).presentation, 0))));

  // m = n is the identity morphism
  CHECK(grr_embedding_check(2, 2, 3).passed());
  CHECK(grr_embedding_check(2, 2, -2).passed());
}

TEST_CASE("section trace oracle") {
  const Scalar alpha(Rational(7));
  CHECK(section_trace_oracle(1, {{Scalar(1), 1}, {alpha, 1}}, 2) ==
        Scalar(1) + alpha + alpha * alpha);
  CHECK(section_trace_oracle(2, {{Scalar(1), 2}, {Scalar(2), 1}}, 1) ==
        Scalar(4));
  CHECK(section_trace_oracle(2, {{Scalar(5), 3}}, 0) == Scalar(1));
  CHECK_THROWS_AS(section_trace_oracle(1, {{Scalar(1), 2}}, -1), math_error);
}

TEST_CASE("atiyah-bott spot checks") {
  auto r = atiyah_bott_check(1, {Scalar(1), Scalar(2)}, 2);
  CHECK(r.passed());
  CHECK(r.lhs == json("7"));

  // k = 0 gives the partial-fraction identity, any alpha != 1
  CHECK(atiyah_bott_check(1, {Scalar(1), Scalar(Rational(5, 7))}, 0).passed());

  // cyclotomic eigenvalues
  auto f12 = cyclotomic_field(12);
  Scalar z3 = Scalar::generator_power(f12, 4);
  Scalar z4 = Scalar::generator_power(f12, 3);
  CHECK(atiyah_bott_check(2, {z3, z4, Scalar(Rational(2), f12)}, 3).passed());

  CHECK_THROWS_AS(atiyah_bott_check(1, {Scalar(1), Scalar(1)}, 0),
                  localization_error);
  CHECK_THROWS_AS(atiyah_bott_check(1, {Scalar(1), Scalar(2)}, -1), math_error);
  CHECK_THROWS_AS(atiyah_bott_check(2, {Scalar(1), Scalar(2)}, 1), math_error);
}

TEST_CASE("equivariant hrr") {
  auto spot = equivariant_hrr_check(2, {{Scalar(1), 2}, {Scalar(2), 1}}, 1);
  CHECK(spot.passed());
  CHECK(spot.lhs == json("4"));

  // single block: alpha^k * chi(P^n, O(k))
  auto single = equivariant_hrr_check(2, {{Scalar(3), 3}}, 3);
  CHECK(single.passed());
  CHECK(single.lhs == json(to_string(Rational(27 * 10))));

  // multiplicity-1 blocks coincide with atiyah-bott
  testgen::Rng rng(555);
  for (int i = 0; i < 10; ++i) {
    std::vector<Scalar> alphas{Scalar(1), Scalar(2 + i), Scalar(Rational(1, 2))};
    std::vector<std::pair<Scalar, long>> blocks;
    for (const auto &a : alphas)
      blocks.emplace_back(a, 1);
    const long k = i % 4;
    auto ab = atiyah_bott_check(2, alphas, k);
    auto eq = equivariant_hrr_check(2, blocks, k);
    CHECK(ab.passed());
    CHECK(eq.passed());
    CHECK(canonical_dump(ab.lhs) == canonical_dump(eq.lhs));
  }
}

TEST_CASE("equivariant grr along fixed-component inclusions") {
  // point into P^1, trivial bundle: the worked example
  auto r = equivariant_grr_check(1, {{Scalar(1), 1}, {Scalar(3), 1}}, 0, 1,
                                 Scalar(1));
  CHECK(r.passed());

  // twists, nontrivial mu, bigger blocks
  CHECK(equivariant_grr_check(2, {{Scalar(1), 2}, {Scalar(2), 1}}, 2, 0,
                              Scalar(Rational(5)))
            .passed());
  CHECK(equivariant_grr_check(3, {{Scalar(2), 2}, {Scalar(3), 2}}, 1, 1,
                              Scalar(1))
            .passed());

  // single block: self-inclusion of the unique component (trivial ambient
  // action), the e_g = 1 consistency case
  CHECK(equivariant_grr_check(2, {{Scalar(4), 3}}, 2, 0, Scalar(1)).passed());

  // cyclotomic eigenvalues
  auto f3 = cyclotomic_field(3);
  CHECK(equivariant_grr_check(1,
                              {{Scalar(Rational(1), f3), 1},
                               {Scalar::generator_power(f3, 1), 1}},
                              1, 0, Scalar(1))
            .passed());

  CHECK_THROWS_AS(equivariant_grr_check(1, {{Scalar(1), 1}, {Scalar(2), 1}}, 0,
                                        5, Scalar(1)),
                  math_error);
  CHECK_THROWS_AS(equivariant_grr_check(1, {{Scalar(1), 1}, {Scalar(2), 1}}, 0,
                                        0, Scalar(0)),
                  math_error);
}

TEST_CASE("todd two-path consistency") {
  for (const auto &factors :
       std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 1}, {1, 2}, {}})
    CHECK(todd_consistency_check(factors).passed());
}

TEST_CASE("perturbing the todd series breaks hrr") {
  auto P1 = multiprojective({1});
  SeriesSpec perturbed = named_series("todd", 1);
  perturbed.name = "";
  perturbed.coeffs[1] = Rational(1, 3); // instead of 1/2
  const Scalar lhs = integrate(chern_character(line_bundle(P1, {1})) *
                               mult_class(perturbed, P1.tangent));
  CHECK(lhs != euler_char_oracle(P1, {{1}}));
}

TEST_CASE("scenario dispatch") {
  json hrr = {{"kind", "hrr"},
              {"variety", {{"factors", {1, 1}}}},
              {"bundle", {{"line", {1, 1}}}}};
  auto r = evaluate_scenario(hrr, "t0");
  CHECK(r.passed());
  CHECK(r.id == "t0");
  CHECK(r.kind == "hrr");

  json with_id = hrr;
  with_id["id"] = "named";
  CHECK(evaluate_scenario(with_id, "t0").id == "named");

  json ab = {{"kind", "atiyah_bott"},
             {"n", 1},
             {"alphas", {"1", "1"}},
             {"k", 0}};
  auto bad = evaluate_scenario(ab, "t1");
  CHECK(bad.errored);
  CHECK_FALSE(bad.equal);
  REQUIRE_FALSE(bad.notes.empty());
  CHECK(bad.notes[0].find("localization criterion failed") != std::string::npos);

  json eqgrr = {{"kind", "equivariant_grr"},
                {"n", 1},
                {"blocks", {{{"alpha", "1"}, {"mult", 1}},
                            {{"alpha", "4"}, {"mult", 1}}}},
                {"k", 1},
                {"component", 0}};
  CHECK(evaluate_scenario(eqgrr, "t2").passed());

  json dexp_matrix = {{"kind", "dexp"},
                      {"matrix",
                       {{"size", 3},
                        {"X", {{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}},
                        {"Y", {{"0", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}}}}};
  CHECK(evaluate_scenario(dexp_matrix, "t3").passed());

  json tc = {{"kind", "todd_consistency"}, {"factors", {1, 2}}};
  CHECK(evaluate_scenario(tc, "t4").passed());

  // truncation degree defaults to 6 and is capped at 9
  CHECK(evaluate_scenario(json{{"kind", "dexp"}}, "t4b").passed());
  CHECK(evaluate_scenario(json{{"kind", "dexp"}, {"N", 10}}, "t4c").errored);

  json custom_f = {{"kind", "todd_consistency"},
                   {"factors", {2}},
                   {"f", {{"coeffs", {"1", "1/4", "-2/3"}}}}};
  CHECK(evaluate_scenario(custom_f, "t5").passed());

  CHECK_THROWS_AS(evaluate_scenario(json{{"kind", "nonsense"}}, "t6"),
                  parse_error);
  CHECK_THROWS_AS(evaluate_scenario(json{{"no_kind", 1}}, "t7"), parse_error);
  CHECK_THROWS_AS(
      evaluate_scenario(json{{"kind", "hrr"}, {"variety", 7}}, "t8"),
      parse_error);
}

TEST_CASE("equivariant scenarios accept mixed rational and cyclotomic alphas") {
  json mod = json::array({"1", "0", "-1", "0", "1"}); // z^4 - z^2 + 1
  json zeta3 = {{"modulus", mod}, {"coeffs", {"-1", "0", "1", "0"}}};
  json zeta4 = {{"modulus", mod}, {"coeffs", {"0", "0", "0", "1"}}};
  json ab = {{"kind", "atiyah_bott"},
             {"n", 2},
             {"alphas", {zeta3, zeta4, "2"}},
             {"k", 2}};
  CHECK(evaluate_scenario(ab, "zeta").passed());
}

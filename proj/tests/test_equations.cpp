#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "humbert/equations.hpp"
#include "humbert/verification.hpp"

using namespace humbert;

namespace {

mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

std::vector<mpq_class> sorted(std::vector<mpq_class> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("extended rationals") {
  CHECK(ExtRat(4, 6).str() == "2/3");
  CHECK(ExtRat(-4, 6).str() == "-2/3");
  CHECK(ExtRat::infinity().str() == "inf");
  CHECK(parse_ext_rat("inf").is_infinity());
  CHECK(parse_ext_rat("5/2") == ExtRat(5, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(parse_rational_csv("2,3/4").size() == 2);
  CHECK(ExtRat(1, 2) < ExtRat(2, 3));
  CHECK(ExtRat(7) < ExtRat::infinity());
}

TEST_CASE("mobius maps") {
  MobiusMap m(2, 3, 1, 1);  // (2z+3)/(z+1)
  CHECK(m(ExtRat(0)) == ExtRat(3));
  CHECK(m(ExtRat::infinity()) == ExtRat(2));
  CHECK(m(ExtRat(-1)).is_infinity());
  CHECK(m.inverse()(m(ExtRat(5))) == ExtRat(5));
  CHECK(MobiusMap::identity().compose(m)(ExtRat(4)) == m(ExtRat(4)));
  CHECK_THROWS_AS(MobiusMap(1, 2, 2, 4), std::domain_error);
}

TEST_CASE("triple normalizer") {
  MobiusMap id = triple_normalizer(ExtRat::infinity(), ExtRat(0), ExtRat(1));
  CHECK(id.is_identity());

  MobiusMap t = triple_normalizer(ExtRat(1), ExtRat(2), ExtRat(3));
  CHECK(t(ExtRat(1)).is_infinity());
  CHECK(t(ExtRat(2)) == ExtRat(0));
  CHECK(t(ExtRat(3)) == ExtRat(1));

  MobiusMap h = triple_normalizer(ExtRat::infinity(), ExtRat(0), ExtRat(2));
  CHECK(h(ExtRat(5)) == ExtRat(5, 2));  // z/2

  CHECK_THROWS_AS(triple_normalizer(ExtRat(1), ExtRat(1), ExtRat(2)),
                  std::domain_error);
}

TEST_CASE("cross-ratio orbits") {
  CHECK(cross_ratio_orbit(ExtRat(2)) == std::vector<mpq_class>{q(-1), q(1, 2), q(2)});
  CHECK(cross_ratio_orbit(ExtRat(3)) ==
        std::vector<mpq_class>{q(-2), q(-1, 2), q(1, 3), q(2, 3), q(3, 2), q(3)});
  CHECK(cross_ratio_orbit(ExtRat(1, 2)) ==
        std::vector<mpq_class>{q(-1), q(1, 2), q(2)});
  CHECK(cross_ratio_canonical(q(3, 2)) == q(-2));
  CHECK_THROWS_AS(cross_ratio_orbit(ExtRat(1)), std::domain_error);
  CHECK_THROWS_AS(cross_ratio_orbit(ExtRat::infinity()), std::domain_error);
}

TEST_CASE("pair covers") {
  EvenCover c23 = pair_cover(ExtRat(2), ExtRat(3));  // (2z^2+3)/(z^2+1)
  CHECK(c23.critical_value_at_infinity() == ExtRat(2));
  CHECK(c23.critical_value_at_zero() == ExtRat(3));
  CHECK(c23(ExtRat(1)) == ExtRat(5, 2));

  EvenCover sq = pair_cover(ExtRat::infinity(), ExtRat(0));  // z^2
  CHECK(sq.post().is_identity());

  EvenCover inv = pair_cover(ExtRat(0), ExtRat(1));  // 1/(z^2+1)
  CHECK(inv(ExtRat(1)) == ExtRat(1, 2));
  CHECK(inv(ExtRat::infinity()) == ExtRat(0));

  CHECK_THROWS_AS(pair_cover(ExtRat(2), ExtRat(2)), std::domain_error);
  CHECK_THROWS_AS(pair_cover(ExtRat(2), ExtRat::infinity()), std::domain_error);
}

TEST_CASE("preimage squares") {
  EvenCover c23 = pair_cover(ExtRat(2), ExtRat(3));
  CHECK(preimage_square(c23, ExtRat::infinity()) == q(-1));
  CHECK(preimage_square(c23, ExtRat(0)) == q(-3, 2));
  EvenCover sq = pair_cover(ExtRat::infinity(), ExtRat(0));
  CHECK(preimage_square(sq, ExtRat(2)) == q(2));
  CHECK_THROWS_AS(preimage_square(c23, ExtRat(2)), std::domain_error);
  CHECK_THROWS_AS(preimage_square(c23, ExtRat(3)), std::domain_error);
}

TEST_CASE("pair quotient curves") {
  BranchSet branch(4, {q(2), q(3)});
  QuotientCurve c10 = pair_quotient_curve(branch, 4, 5);
  CHECK(sorted(c10.equation.constants()) ==
        std::vector<mpq_class>{q(-2), q(-3, 2), q(-1)});
  CHECK(c10.equation.genus() == 2);
  CHECK(c10.equation.render() == "y^2 = (x^2+1)(x^2+3/2)(x^2+2)");
  CHECK(verify_cover_consistency(c10));

  QuotientCurve c1 = pair_quotient_curve(branch, 1, 2);
  CHECK(sorted(c1.equation.constants()) == std::vector<mpq_class>{q(1), q(2), q(3)});

  QuotientCurve c8 = pair_quotient_curve(branch, 3, 4);
  CHECK(sorted(c8.equation.constants()) ==
        std::vector<mpq_class>{q(-2), q(-1), q(-1, 2)});
  CHECK(c8.equation.render() == "y^2 = (x^2+1)(x^2+2)(x^2+1/2)");
}

TEST_CASE("triple quotient curves") {
  BranchSet branch(4, {q(2), q(3)});
  QuotientCurve t123 = triple_quotient_curve(branch, 1, 2, 3);
  CHECK(sorted(t123.equation.constants()) == std::vector<mpq_class>{q(2), q(3)});
  CHECK(t123.equation.render() == "y^2 = (x^4-6x^2+1)(x^4-10x^2+1)");
  CHECK(t123.equation.genus() == 3);
  CHECK(verify_cover_consistency(t123));

  QuotientCurve t124 = triple_quotient_curve(branch, 1, 2, 4);
  CHECK(sorted(t124.equation.constants()) ==
        std::vector<mpq_class>{q(1, 2), q(3, 2)});
  CHECK(t124.equation.render() == "y^2 = (x^4+1)(x^4-4x^2+1)");

  QuotientCurve t345 = triple_quotient_curve(branch, 3, 4, 5);
  CHECK(sorted(t345.equation.constants()) == std::vector<mpq_class>{q(2), q(4)});
}

TEST_CASE("tower quartic curves") {
  BranchSet branch(4, {q(2), q(3)});
  auto w_of = [&](int r) {
    return sorted(tower_quartic_curve(branch, 4, 5, r).equation.constants());
  };
  CHECK(w_of(3) == std::vector<mpq_class>{q(-3, 2), q(-1)});
  CHECK(w_of(1) == std::vector<mpq_class>{q(-2), q(-3, 2)});
  CHECK(w_of(2) == std::vector<mpq_class>{q(-2), q(-1)});
  QuotientCurve tw = tower_quartic_curve(branch, 4, 5, 3);
  CHECK(tw.equation.render() == "y^2 = (x^4+1)(x^4+3/2)");
  CHECK(tw.equation.genus() == 3);
  CHECK(verify_cover_consistency(tw));
  CHECK_THROWS_AS(tower_quartic_curve(branch, 4, 4, 3), std::domain_error);
}

TEST_CASE("full-rank curves") {
  BranchSet b5(5, {q(2), q(3), q(5)});
  QuotientCurve c = full_rank_quotient_curve(b5);
  CHECK(c.equation.constants() ==
        std::vector<mpq_class>{q(0), q(1), q(2), q(3), q(5)});
  CHECK(c.equation.genus() == 2);
  CHECK(c.equation.render() == "y^2 = x(x-1)(x-2)(x-3)(x-5)");
  CHECK(verify_cover_consistency(c));

  BranchSet b7(7, {q(2), q(3), q(5), q(7), q(11)});
  CHECK(full_rank_quotient_curve(b7).equation.genus() == 3);

  BranchSet b4(4, {q(2), q(3)});
  CHECK_THROWS_AS(full_rank_quotient_curve(b4), std::domain_error);
}

TEST_CASE("single omission curves") {
  BranchSet branch(4, {q(2), q(3)});
  auto roots = [&](int omit) {
    return single_omission_curve(branch, omit).equation.constants();
  };
  CHECK(roots(5) == std::vector<mpq_class>{q(0), q(1), q(2)});
  CHECK(roots(4) == std::vector<mpq_class>{q(0), q(1), q(3)});
  CHECK(roots(1) == std::vector<mpq_class>{q(0), q(1), q(4, 3)});
  CHECK(single_omission_curve(branch, 1).equation.genus() == 1);
  CHECK(verify_cover_consistency(single_omission_curve(branch, 2)));

  BranchSet b5(5, {q(2), q(3), q(5)});
  CHECK_THROWS_AS(single_omission_curve(b5, 1), std::domain_error);
}

TEST_CASE("cover consistency rejects perturbations") {
  BranchSet branch(4, {q(2), q(3)});
  QuotientCurve c10 = pair_quotient_curve(branch, 4, 5);
  HyperellipticEquation broken(EquationShape::kEvenQuadratics,
                               {q(-1), q(-5, 2), q(-2)});
  CHECK_FALSE(verify_cover_consistency(broken, c10.cover, c10.expected));

  QuotientCurve tw = tower_quartic_curve(branch, 4, 5, 3);
  CHECK(verify_cover_consistency(tw));

  CHECK_THROWS_AS(
      verify_cover_consistency(broken, tw.cover, tw.expected),
      std::domain_error);
}

TEST_CASE("equation shape invariants") {
  CHECK_THROWS_AS(
      HyperellipticEquation(EquationShape::kEvenQuadratics, {q(1), q(1)}),
      std::domain_error);
  CHECK_THROWS_AS(HyperellipticEquation(EquationShape::kEvenQuadratics, {q(0)}),
                  std::domain_error);
  CHECK_THROWS_AS(HyperellipticEquation(EquationShape::kEvenQuarticsMu, {q(1)}),
                  std::domain_error);
  CHECK_THROWS_AS(
      HyperellipticEquation(EquationShape::kEvenQuadratics, {}),
      std::domain_error);
  HyperellipticEquation odd(EquationShape::kRootList, {q(0), q(1), q(2)});
  CHECK(odd.branch_count() == 4);
  CHECK(odd.genus() == 1);
  HyperellipticEquation even(EquationShape::kRootList, {q(0), q(1), q(2), q(7)});
  CHECK(even.branch_count() == 4);
}

TEST_CASE("scaling equivalence") {
  HyperellipticEquation a(EquationShape::kEvenQuadratics, {q(-1), q(-3, 2), q(-2)});
  HyperellipticEquation b(EquationShape::kEvenQuadratics, {q(1), q(3, 2), q(2)});
  auto sigma = equal_up_to_scaling(a, b);
  REQUIRE(sigma.has_value());
  CHECK(*sigma == q(-1));

  auto inverse_sigma = equal_up_to_scaling(b, a);
  REQUIRE(inverse_sigma.has_value());
  CHECK(*inverse_sigma == q(-1));  // sigma and 1/sigma coincide here

  CHECK(*equal_up_to_scaling(a, a) == q(1));

  HyperellipticEquation c(EquationShape::kEvenQuadratics, {q(1), q(2), q(3)});
  HyperellipticEquation d(EquationShape::kEvenQuadratics, {q(1), q(2), q(4)});
  CHECK_FALSE(equal_up_to_scaling(c, d).has_value());

  // C3 against its printed rescaling at (2,3): sigma = 1/2.
  BranchSet branch(4, {q(2), q(3)});
  QuotientCurve c3 = pair_quotient_curve(branch, 1, 4);
  HyperellipticEquation c3p(EquationShape::kEvenQuadratics,
                            {q(-1), q(-1, 2), q(1, 2)});
  auto s = equal_up_to_scaling(c3.equation, c3p);
  REQUIRE(s.has_value());
  CHECK(*s == q(1, 2));

  HyperellipticEquation mu(EquationShape::kEvenQuarticsMu, {q(2), q(3)});
  CHECK(*equal_up_to_scaling(mu, mu) == q(1));
  CHECK_THROWS_AS(equal_up_to_scaling(a, mu), std::domain_error);
  HyperellipticEquation roots(EquationShape::kRootList, {q(0), q(1)});
  CHECK_THROWS_AS(equal_up_to_scaling(roots, roots), std::domain_error);

  // symmetry: sigma against 1/sigma on an asymmetric pair
  HyperellipticEquation e1(EquationShape::kEvenQuarticsW, {q(1), q(2)});
  HyperellipticEquation e2(EquationShape::kEvenQuarticsW, {q(3), q(6)});
  CHECK(*equal_up_to_scaling(e1, e2) == q(3));
  CHECK(*equal_up_to_scaling(e2, e1) == q(1, 3));
}

TEST_CASE("equation json uses exact strings") {
  BranchSet branch(4, {q(2), q(3)});
  nlohmann::json j = equation_json(pair_quotient_curve(branch, 4, 5));
  CHECK(j["shape"] == "even_quadratics");
  CHECK(j["genus"] == 2);
  CHECK(j["factors"] == nlohmann::json::array({"-1", "-3/2", "-2"}));
  CHECK(j["cover"]["kind"] == "square_then_mobius");
  CHECK(j["cover"]["matrix"][0] == nlohmann::json::array({"2", "3"}));
}

TEST_CASE("random tuples: every family is cover-consistent") {
  std::mt19937 rng(99);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      ParameterTuple p = random_tuple(n, rng);
      BranchSet branch(n, p.lambdas());
      for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
          CHECK(verify_cover_consistency(pair_quotient_curve(branch, i, j)));
          for (int r = 1; r <= n + 1; ++r) {
            if (r == i || r == j) continue;
            CHECK(verify_cover_consistency(tower_quartic_curve(branch, i, j, r)));
            if (r > j) {
              CHECK(verify_cover_consistency(triple_quotient_curve(branch, i, j, r)));
            }
          }
        }
      }
      if (n % 2 == 1) {
        CHECK(verify_cover_consistency(full_rank_quotient_curve(branch)));
      } else {
        for (int i = 1; i <= n + 1; ++i) {
          CHECK(verify_cover_consistency(single_omission_curve(branch, i)));
        }
      }
    }
  }
}

TEST_CASE("moduli action on the distinguished pair curve") {
  // The genus-2 curve over the pair {lambda1, lambda2} transforms under
  // s, b, c into three printed images; check the emitted curves at the
  // image tuples against those forms, symbolically instantiated.
  auto image_curve = [](const mpq_class& a, const mpq_class& b) {
    BranchSet branch(4, {a, b});
    auto c = pair_quotient_curve(branch, 4, 5).equation.constants();
    std::sort(c.begin(), c.end());
    return c;
  };
  for (auto [l1, l2] : std::vector<std::pair<mpq_class, mpq_class>>{
           {q(2), q(3)}, {q(-5, 3), q(7, 2)}}) {
    // s: (l1, l2) -> (1/(1-l1), 1/(1-l2))
    CHECK(image_curve(mpq_class(1 / (1 - l1)), mpq_class(1 / (1 - l2))) ==
          sorted({q(-1), mpq_class(-(l1 - 1) / (l2 - 1)),
                  mpq_class(-(l2 * (l1 - 1)) / (l1 * (l2 - 1)))}));
    // b: (l1, l2) -> (1/l1, 1/l2)
    CHECK(image_curve(mpq_class(1 / l1), mpq_class(1 / l2)) ==
          sorted({q(-1), mpq_class(-l1 / l2),
                  mpq_class(-(l1 * (l2 - 1)) / (l2 * (l1 - 1)))}));
    // c: (l1, l2) -> (l2, l1)
    CHECK(image_curve(l2, l1) ==
          sorted({q(-1), mpq_class(-l1 / l2), mpq_class(-(l1 - 1) / (l2 - 1))}));
  }
}

TEST_CASE("branch set validation") {
  CHECK_THROWS_AS(BranchSet(4, {q(0), q(3)}), std::domain_error);
  CHECK_THROWS_AS(BranchSet(4, {q(2), q(2)}), std::domain_error);
  CHECK_THROWS_AS(BranchSet(4, {q(2)}), std::domain_error);
  BranchSet b(4, {q(2), q(3)});
  CHECK(b.value(1).is_infinity());
  CHECK(b.value(4) == ExtRat(2));
  CHECK_THROWS_AS(b.value(6), std::domain_error);
}

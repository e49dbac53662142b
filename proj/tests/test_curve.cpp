#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inose/curve.hpp"

using namespace inose;

namespace {

const PencilConfig& cfg23() {
  static const PencilConfig cfg = validate_config(Rational(2), Rational(3));
  return cfg;
}

RatFunc rf(std::vector<Rational> num, std::vector<Rational> den) {
  return RatFunc::reduce(Poly(std::move(num)), Poly(std::move(den)));
}

const RatFunc& genus2_h1() {
  static const RatFunc h1 = rf({Rational(-4)}, {Rational(-8), Rational(0), Rational(1)});
  return h1;
}

}  // namespace

TEST_CASE("branch polynomial of the genus-2 section") {
  // -8 (x^2-4)(x^2-6)(x^2-8) = -8x^6 + 144x^4 - 832x^2 + 1536
  const Poly expected({Rational(1536), Rational(0), Rational(-832), Rational(0), Rational(144),
                       Rational(0), Rational(-8)});
  CHECK(branch_polynomial(cfg23(), genus2_h1()) == expected);
}

TEST_CASE("branch polynomial of h1 = x recovers the Legendre cubic") {
  const RatFunc h1 = RatFunc(Poly::x());
  CHECK(branch_polynomial(cfg23(), h1) ==
        Poly({Rational(0), Rational(2), Rational(-3), Rational(1)}));
  CHECK_THROWS_AS(branch_polynomial(cfg23(), RatFunc(Rational(5))), Error);
}

TEST_CASE("the four branch factors are pairwise coprime") {
  // use the genus-6 section where none of the factors is constant
  const PencilPoint doubled = mw_scale(cfg23(), 2, named_section(cfg23(), 2, 2));
  const Poly& p1 = doubled.h1().num();
  const Poly& q1 = doubled.h1().den();
  const Poly factors[] = {p1, p1 - q1, p1 - q1 * Rational(2), q1};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(poly_gcd(factors[i], factors[j]).degree() == 0);
}

TEST_CASE("genus from branch polynomial") {
  const Poly x = Poly::x();
  {
    const auto result = genus_from_branch(branch_polynomial(cfg23(), genus2_h1()));
    CHECK(result.branch_count == 6);
    CHECK(result.genus == 2);
  }
  {
    // squarefree of odd degree picks up the place at infinity
    std::vector<Rational> coeffs(6, Rational(0));
    coeffs[0] = Rational(1);
    coeffs[5] = Rational(1);
    const auto result = genus_from_branch(Poly(coeffs));  // x^5 + 1
    CHECK(result.branch_count == 6);
    CHECK(result.genus == 2);
  }
  {
    const Poly f = (x - Poly{Rational(1)}) * (x - Poly{Rational(1)}) *
                   (x * x + Poly{Rational(1)});
    const auto result = genus_from_branch(f);
    CHECK(result.branch_count == 2);
    CHECK(result.genus == 0);
  }
  CHECK_THROWS_AS(genus_from_branch(Poly()), Error);
  CHECK_THROWS_AS(genus_from_branch(Poly{Rational(3)}), Error);
}

TEST_CASE("named intersections of the genus-2 section") {
  const PencilPoint section = section_from_quadruple(cfg23(), {0, 0, 1, 1});
  const long long expected[3][3] = {{0, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(named_intersection(cfg23(), section, i, j) == expected[i - 1][j - 1]);
  CHECK_THROWS_AS(named_intersection(cfg23(), section, 0, 1), Error);
}

TEST_CASE("named intersection rejects self-intersection and separates constants") {
  const PencilPoint a22 = named_section(cfg23(), 2, 2);
  CHECK_THROWS_AS(named_intersection(cfg23(), a22, 2, 2), Error);
  // a22 shares only one coordinate with these; disjoint constant sections
  CHECK(named_intersection(cfg23(), a22, 2, 3) == 0);
  CHECK(named_intersection(cfg23(), a22, 3, 2) == 0);
  CHECK(named_intersection(cfg23(), a22, 1, 1) == 0);
}

TEST_CASE("component classification") {
  const PencilPoint genus2 = section_from_quadruple(cfg23(), {0, 0, 1, 1});
  const ComponentClass c2 = classify_components(cfg23(), genus2);
  CHECK(c2.inf_index == 1);
  CHECK(c2.zero_index == 1);
  CHECK(c2.contr_inf == Rational(0));
  CHECK(c2.contr_zero == Rational(0));

  const PencilPoint genus6 = mw_scale(cfg23(), 2, named_section(cfg23(), 2, 2));
  const ComponentClass c6 = classify_components(cfg23(), genus6);
  CHECK(c6.inf_index == 3);  // leading ratio 2 = a
  CHECK(c6.contr_inf == Rational(4, 3));
  CHECK(c6.zero_index != 1);
  CHECK(c6.contr_zero == Rational(4, 3));

  CHECK_THROWS_AS(classify_components(cfg23(), named_section(cfg23(), 2, 2)), Error);
}

TEST_CASE("build_model: the genus-2 construction") {
  const HyperellipticModel model = build_model(cfg23(), {0, 0, 1, 1});
  CHECK(model.n == 1);
  CHECK(model.genus == 2);
  CHECK(model.branch_count == 6);
  CHECK(model.genus_is_expected);
  CHECK(model.sf == model.f);  // squarefree branch polynomial
  CHECK(model.m == Poly{Rational(1)});
  CHECK(model.sf.degree() == 6);
  CHECK(model.y_multiplier ==
        rf({Rational(1)}, {Rational(64), Rational(0), Rational(-16), Rational(0), Rational(1)}));
  CHECK(model.stats.deg_h1 == 2);
  CHECK(model.stats.deg_h2 == 2);
  CHECK(model.stats.sum_named == 4);
  CHECK(model.stats.total_D == Rational(6));
  CHECK(model.stats.a00 == Rational(2));
  CHECK(model.stats.p_a11 == 0);
  CHECK(model.stats.component_inf == 1);
  CHECK(model.stats.component_zero == 1);
  CHECK(model.stats.height == Rational(4));
}

TEST_CASE("build_model: the genus-6 construction") {
  const HyperellipticModel model = build_model(cfg23(), {2, 0, 0, 0});
  CHECK(model.n == 2);
  CHECK(model.genus == 6);
  CHECK(model.branch_count == 14);
  CHECK(model.genus_is_expected);
  CHECK(model.stats.deg_h1 == 4);
  CHECK(model.stats.deg_h2 == 4);
  CHECK(model.stats.sum_named == 10);
  CHECK(model.stats.total_D == Rational(14));
  CHECK(model.stats.a00 == Rational(4));
  CHECK(model.stats.p_a11 == 2);
  CHECK(model.stats.component_inf == 3);
  CHECK(model.stats.height == Rational(16, 3));
  CHECK(model.f == model.sf * model.m * model.m);
}

TEST_CASE("build_model rejects degenerate quadruples") {
  for (const Quadruple& quad :
       {Quadruple{0, 0, 0, 0}, Quadruple{1, 0, 0, 0}, Quadruple{0, 0, 1, 0}}) {
    bool rejected = false;
    try {
      build_model(cfg23(), quad);
    } catch (const Error& e) {
      rejected = (e.code() == ErrorCode::DegenerateSection);
    }
    CHECK(rejected);
  }
}

TEST_CASE("build_model passes all checks for small quadruples") {
  const PencilConfig cfg35 = validate_config(Rational(3), Rational(5));
  for (const Quadruple& quad : {Quadruple{0, 0, 1, 1}, Quadruple{1, 1, 0, 0},
                                Quadruple{-1, 0, 0, 0}, Quadruple{0, 0, -1, 1},
                                Quadruple{1, 0, 1, 0}}) {
    if (n_invariant(quad) == 0) continue;
    for (const PencilConfig* cfg : {&cfg23(), &cfg35}) {
      const HyperellipticModel model = build_model(*cfg, quad);
      CHECK(model.stats.sum_named == 6 * model.n - 2);
      CHECK(model.genus >= 1);
    }
  }
}

TEST_CASE("the two worked families keep their genus at other configs") {
  for (const auto& [a, b] : {std::pair{Rational(3), Rational(5)},
                             std::pair{Rational(2), Rational(7)}}) {
    const PencilConfig cfg = validate_config(a, b);
    const HyperellipticModel g2 = build_model(cfg, {0, 0, 1, 1});
    CHECK(g2.genus == 2);
    CHECK(g2.genus_is_expected);
    const HyperellipticModel g6 = build_model(cfg, {2, 0, 0, 0});
    CHECK(g6.genus == 6);
    CHECK(g6.genus_is_expected);
  }
}

TEST_CASE("harvest on the genus-2 model") {
  const HyperellipticModel model = build_model(cfg23(), {0, 0, 1, 1});

  const auto at_bound_2 = harvest_witnesses(model, 2);
  REQUIRE(at_bound_2.size() == 2);
  for (const WitnessRecord& rec : at_bound_2) {
    CHECK(rec.weierstrass);
    CHECK(rec.y == Rational(0));
    CHECK((rec.x == Rational(2) || rec.x == Rational(-2)));
    CHECK_FALSE(rec.on_ea.at_infinity);
    CHECK(rec.on_ea.x == Rational(1));
    CHECK(rec.on_ea.y == Rational(0));
    CHECK(rec.on_eb.x == Rational(1));
    CHECK(rec.on_eb.y == Rational(0));
  }

  // sf(0) = 1536 = 2^9 * 3 is not a square, so x = 0 yields nothing
  CHECK(model.sf.eval(Rational(0)) == Rational(1536));
  CHECK(harvest_witnesses(model, 0).empty());

  // at bound 4 the two Weierstrass points are still the only hits
  const auto at_bound_4 = harvest_witnesses(model, 4);
  CHECK(at_bound_4.size() == 2);

  CHECK_THROWS_AS(harvest_witnesses(model, -1), Error);
}

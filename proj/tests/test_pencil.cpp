#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "inose/pencil.hpp"

using namespace inose;

namespace {

const PencilConfig& cfg23() {
  static const PencilConfig cfg = validate_config(Rational(2), Rational(3));
  return cfg;
}

RatFunc rf(std::vector<Rational> num, std::vector<Rational> den) {
  return RatFunc::reduce(Poly(std::move(num)), Poly(std::move(den)));
}

// The closed form of A_23 + A_32 as reduced rational functions.
PencilPoint genus2_section_closed_form(const PencilConfig& cfg) {
  const Rational a = cfg.a(), b = cfg.b();
  const Rational a1 = a - Rational(1), b1 = b - Rational(1);
  const Poly den{-(b1 * b1 * b1), Rational(0), a1 * a1 * a1};
  const RatFunc h1 = RatFunc::reduce(Poly{(a - b) * b1 * b1}, den);
  const RatFunc h2 = RatFunc::reduce(Poly{Rational(0), Rational(0), (a - b) * a1 * a1}, den);
  return make_point(cfg, h1, h2);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK(validate_config(Rational(2), Rational(3)).a() == Rational(2));
  CHECK_THROWS_AS(validate_config(Rational(0), Rational(3)), Error);
  CHECK_THROWS_AS(validate_config(Rational(1), Rational(3)), Error);
  CHECK_THROWS_AS(validate_config(Rational(2), Rational(0)), Error);
  CHECK_THROWS_AS(validate_config(Rational(2), Rational(1)), Error);

  const auto code_of = [](const Rational& a, const Rational& b) {
    try {
      validate_config(a, b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidSpec;
  };
  CHECK(code_of(Rational(2), Rational(2)) == ErrorCode::IsomorphicFactors);
  // -1 = 1 - 2 lies in the six-value orbit of a = 2
  CHECK(code_of(Rational(2), Rational(-1)) == ErrorCode::IsomorphicFactors);
  CHECK(code_of(Rational(2), Rational(1, 2)) == ErrorCode::IsomorphicFactors);
  CHECK(code_of(Rational(3), Rational(2, 3)) == ErrorCode::IsomorphicFactors);
  CHECK(code_of(Rational(3), Rational(-1, 2)) == ErrorCode::IsomorphicFactors);
  CHECK(code_of(Rational(0), Rational(3)) == ErrorCode::DegenerateLegendre);
}

TEST_CASE("named sections") {
  const auto& cfg = cfg23();
  CHECK(named_section(cfg, 2, 2) == make_point(cfg, RatFunc(Rational(1)), RatFunc(Rational(1))));
  CHECK(named_section(cfg, 1, 1) == make_point(cfg, RatFunc(Rational(0)), RatFunc(Rational(0))));
  CHECK(named_section(cfg, 3, 3) == make_point(cfg, RatFunc(Rational(2)), RatFunc(Rational(3))));
  CHECK(named_section(cfg, 1, 1) == pencil_zero(cfg));
  CHECK_THROWS_AS(named_section(cfg, 0, 2), Error);
  CHECK_THROWS_AS(named_section(cfg, 1, 4), Error);
}

TEST_CASE("pencil identity predicate") {
  const auto& cfg = cfg23();
  CHECK(satisfies_pencil(cfg, RatFunc(Rational(1)), RatFunc(Rational(1))));
  // the genus-2 section coordinates
  const RatFunc h1 = rf({Rational(-4)}, {Rational(-8), Rational(0), Rational(1)});
  const RatFunc h2 = rf({Rational(0), Rational(0), Rational(-1)},
                        {Rational(-8), Rational(0), Rational(1)});
  CHECK(satisfies_pencil(cfg, h1, h2));
  CHECK_FALSE(satisfies_pencil(cfg, RatFunc(Rational(1)), RatFunc(Rational(2))));
  CHECK_THROWS_AS(make_point(cfg, RatFunc(Rational(1)), RatFunc(Rational(2))), Error);
  CHECK(make_point(cfg, h1, h2).h1() == h1);
}

TEST_CASE("third intersection: vertical chord through A22 and A21") {
  const auto& cfg = cfg23();
  const PencilPoint third = third_intersection(cfg, named_section(cfg, 2, 2),
                                               named_section(cfg, 2, 1));
  CHECK(third == named_section(cfg, 2, 3));  // (1, 3)
}

TEST_CASE("third intersection: chord through O and A22 along y = x") {
  const auto& cfg = cfg23();
  const PencilPoint third =
      third_intersection(cfg, pencil_zero(cfg), named_section(cfg, 2, 2));
  const RatFunc expected = rf({Rational(-3), Rational(0), Rational(2)},
                              {Rational(-1), Rational(0), Rational(1)});
  CHECK(third.h1() == expected);
  CHECK(third.h2() == expected);
  CHECK(satisfies_pencil(cfg, third));
}

TEST_CASE("third intersection: tangent at A33") {
  const auto& cfg = cfg23();
  const PencilPoint a33 = named_section(cfg, 3, 3);
  const PencilPoint tangent = third_intersection(cfg, a33, a33);
  CHECK(satisfies_pencil(cfg, tangent));
  // hand computation: x = (2t^4 - 15t^2 + 27) / (t^4 - 27)
  const RatFunc expected_x =
      rf({Rational(27), Rational(0), Rational(-15), Rational(0), Rational(2)},
         {Rational(-27), Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK(tangent.h1() == expected_x);
}

TEST_CASE("mw_add reproduces the section relations at (2, 3)") {
  const auto& cfg = cfg23();
  CHECK(mw_add(cfg, named_section(cfg, 2, 2), named_section(cfg, 3, 2)) ==
        named_section(cfg, 1, 3));
  CHECK(mw_add(cfg, named_section(cfg, 2, 3), named_section(cfg, 3, 3)) ==
        named_section(cfg, 1, 2));
  CHECK(mw_add(cfg, named_section(cfg, 3, 2), named_section(cfg, 3, 3)) ==
        named_section(cfg, 2, 1));
  CHECK(mw_add(cfg, named_section(cfg, 2, 2), named_section(cfg, 2, 3)) ==
        named_section(cfg, 3, 1));
}

TEST_CASE("identity, negation, and inverse laws") {
  const auto& cfg = cfg23();
  const PencilPoint zero = pencil_zero(cfg);
  const PencilPoint section = genus2_section_closed_form(cfg);
  CHECK(mw_add(cfg, section, zero) == section);
  CHECK(mw_add(cfg, zero, section) == section);
  CHECK(mw_add(cfg, zero, zero) == zero);
  const PencilPoint a22 = named_section(cfg, 2, 2);
  CHECK(mw_add(cfg, a22, mw_neg(cfg, a22)) == zero);
  CHECK(mw_add(cfg, section, mw_neg(cfg, section)) == zero);
  CHECK(mw_neg(cfg, zero) == zero);
}

TEST_CASE("mw_scale") {
  const auto& cfg = cfg23();
  const PencilPoint a22 = named_section(cfg, 2, 2);
  CHECK(mw_scale(cfg, 0, a22) == pencil_zero(cfg));
  CHECK(mw_scale(cfg, 1, a22) == a22);
  CHECK(mw_scale(cfg, -1, a22) == mw_neg(cfg, a22));

  // h1 of 2 A22 matches the closed form 2(t^2+3)(t^2+4) / (t^4+4t^2+8)
  const PencilPoint doubled = mw_scale(cfg, 2, a22);
  CHECK(doubled.h1() == rf({Rational(24), Rational(0), Rational(14), Rational(0), Rational(2)},
                           {Rational(8), Rational(0), Rational(4), Rational(0), Rational(1)}));
  CHECK(satisfies_pencil(cfg, doubled));

  CHECK(mw_scale(cfg, 3, a22) == mw_add(cfg, doubled, a22));
  CHECK(mw_scale(cfg, -3, a22) == mw_neg(cfg, mw_scale(cfg, 3, a22)));
}

TEST_CASE("section_from_quadruple") {
  const auto& cfg = cfg23();
  const PencilPoint section = section_from_quadruple(cfg, {0, 0, 1, 1});
  CHECK(section == genus2_section_closed_form(cfg));
  CHECK(section.h1() == rf({Rational(-4)}, {Rational(-8), Rational(0), Rational(1)}));
  CHECK(section.h2() == rf({Rational(0), Rational(0), Rational(-1)},
                           {Rational(-8), Rational(0), Rational(1)}));
  CHECK(section_from_quadruple(cfg, {0, 0, 0, 0}) == pencil_zero(cfg));
  CHECK(section_from_quadruple(cfg, {1, 0, 0, 1}) == named_section(cfg, 1, 3));
}

TEST_CASE("closed form of A23 + A32 holds at other configs") {
  for (const auto& [a, b] : {std::pair{Rational(3), Rational(5)},
                             std::pair{Rational(2), Rational(7)},
                             std::pair{Rational(-2), Rational(5, 3)}}) {
    const PencilConfig cfg = validate_config(a, b);
    CHECK(section_from_quadruple(cfg, {0, 0, 1, 1}) == genus2_section_closed_form(cfg));
  }
}

TEST_CASE("nine n = 0 quadruples give the nine constant sections") {
  const auto& cfg = cfg23();
  const struct {
    Quadruple quad;
    int i, j;
  } table[] = {
      {{0, 0, 0, 0}, 1, 1}, {{1, 0, 0, 0}, 2, 2}, {{0, 1, 0, 0}, 3, 3},
      {{0, 0, 1, 0}, 2, 3}, {{0, 0, 0, 1}, 3, 2}, {{0, 1, 1, 0}, 1, 2},
      {{0, 1, 0, 1}, 2, 1}, {{1, 0, 1, 0}, 3, 1}, {{1, 0, 0, 1}, 1, 3},
  };
  for (const auto& entry : table)
    CHECK(section_from_quadruple(cfg, entry.quad) == named_section(cfg, entry.i, entry.j));
}

TEST_CASE("group law closure and axioms on random bounded quadruples") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> coef(-2, 2);
  const std::vector<PencilConfig> configs = {validate_config(Rational(2), Rational(3)),
                                             validate_config(Rational(3), Rational(5)),
                                             validate_config(Rational(2), Rational(7))};
  for (const PencilConfig& cfg : configs) {
    for (int trial = 0; trial < 4; ++trial) {
      const Quadruple qa{coef(rng), coef(rng), coef(rng), coef(rng)};
      const Quadruple qb{coef(rng), coef(rng), coef(rng), coef(rng)};
      const PencilPoint P = section_from_quadruple(cfg, qa);
      const PencilPoint Q = section_from_quadruple(cfg, qb);
      const PencilPoint sum = mw_add(cfg, P, Q);
      CHECK(satisfies_pencil(cfg, sum));
      CHECK(sum == mw_add(cfg, Q, P));
      CHECK(satisfies_pencil(cfg, mw_neg(cfg, P)));
      // the sum of quadruples gives the same section
      const Quadruple qsum{qa.p + qb.p, qa.q + qb.q, qa.r + qb.r, qa.s + qb.s};
      CHECK(sum == section_from_quadruple(cfg, qsum));
    }
  }
}

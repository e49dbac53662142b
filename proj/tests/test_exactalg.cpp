#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "inose/poly.hpp"
#include "inose/ratfunc.hpp"
#include "inose/rational.hpp"

using namespace inose;

namespace {

// Independent gcd oracle: plain fraction-field Euclid with monic remainders.
Poly gcd_reference(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = b;
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

Poly random_poly(std::mt19937_64& rng, int max_degree, long coeff_bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-coeff_bound, coeff_bound);
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : coeffs) c = Rational(coef(rng));
  return Poly(std::move(coeffs));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational(-3, 6).to_string() == "-1/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse(Rational(22, 7).to_string()) == Rational(22, 7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
}

TEST_CASE("rational square detection") {
  CHECK(Rational(4, 9).is_perfect_square());
  CHECK(Rational(4, 9).sqrt() == Rational(2, 3));
  CHECK(Rational(0).is_perfect_square());
  CHECK_FALSE(Rational(1536).is_perfect_square());  // 2^9 * 3
  CHECK_FALSE(Rational(-4).is_perfect_square());
  CHECK_FALSE(Rational(1, 8).is_perfect_square());
}

TEST_CASE("poly arithmetic basics") {
  const Poly x = Poly::x();
  const Poly p = x * x - Poly{Rational(1)};  // x^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(3)) == Rational(8));
  CHECK(p.derivative() == Poly({Rational(0), Rational(2)}));
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK((p * Poly()).is_zero());

  Poly q, r;
  Poly::divmod(x * x * x - Poly{Rational(8)}, x - Poly{Rational(2)}, q, r);
  CHECK(r.is_zero());
  CHECK(q == Poly({Rational(4), Rational(2), Rational(1)}));
  CHECK_THROWS_AS(Poly::divmod(p, Poly(), q, r), Error);
}

TEST_CASE("poly gcd examples") {
  const Poly x = Poly::x();
  // shared root 1
  CHECK(poly_gcd(x * x - Poly{Rational(1)},
                 x * x - Poly{Rational(2)} * x + Poly{Rational(1)}) ==
        x - Poly{Rational(1)});
  // gcd with zero is the monic normalization
  const Poly f = Poly{Rational(3)} * x * x + Poly{Rational(6)};
  CHECK(poly_gcd(f, Poly()) == x * x + Poly{Rational(2)});
  CHECK(poly_gcd(Poly(), f) == x * x + Poly{Rational(2)});
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
  // (x-2)^2 and (x-2)(x^2+2x+4)
  CHECK(poly_gcd(x * x - Poly{Rational(4)} * x + Poly{Rational(4)},
                 x * x * x - Poly{Rational(8)}) == x - Poly{Rational(2)});
}

TEST_CASE("poly gcd matches the reference Euclid on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const Poly f = random_poly(rng, 6, 20);
    const Poly g = random_poly(rng, 6, 20);
    const Poly h = random_poly(rng, 4, 10);
    CHECK(poly_gcd(f, g) == gcd_reference(f, g));
    if (!h.is_zero()) {
      const Poly fh = f * h;
      const Poly gh = g * h;
      CHECK(poly_gcd(fh, gh) == gcd_reference(fh, gh));
    }
  }
}

TEST_CASE("gcd of common-multiple inputs picks up the factor") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly f = random_poly(rng, 8, 100);
    const Poly g = random_poly(rng, 8, 100);
    const Poly h = random_poly(rng, 5, 100);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const Poly expected = (poly_gcd(f, g) * h).monic();
    CHECK(poly_gcd(f * h, g * h) == expected);
  }
}

TEST_CASE("squarefree decomposition examples") {
  const Poly x = Poly::x();
  {
    // (x-1)^2 (x+2)
    const Poly f = (x - Poly{Rational(1)}) * (x - Poly{Rational(1)}) * (x + Poly{Rational(2)});
    const auto dec = squarefree_decompose(f);
    CHECK(dec.content == Rational(1));
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0].factor == x + Poly{Rational(2)});
    CHECK(dec.parts[0].multiplicity == 1);
    CHECK(dec.parts[1].factor == x - Poly{Rational(1)});
    CHECK(dec.parts[1].multiplicity == 2);
    CHECK(dec.reassemble() == f);
  }
  {
    const Poly f = Poly{Rational(6)} * x * x;
    const auto dec = squarefree_decompose(f);
    CHECK(dec.content == Rational(6));
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].factor == x);
    CHECK(dec.parts[0].multiplicity == 2);
  }
  {
    // already squarefree: stays in one multiplicity-1 part
    const Poly f = (x * x - Poly{Rational(4)}) * (x * x - Poly{Rational(6)}) *
                   (x * x - Poly{Rational(8)});
    CHECK(poly_gcd(f, f.derivative()).degree() == 0);  // derivative oracle
    const auto dec = squarefree_decompose(f);
    CHECK(dec.content == Rational(1));
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].multiplicity == 1);
    CHECK(dec.parts[0].factor == f);
  }
  CHECK_THROWS_AS(squarefree_decompose(Poly()), Error);
}

TEST_CASE("squarefree reassembly on random structured products") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> mult(1, 4), nfactors(1, 3), deg(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    long content = coef(rng);
    if (content == 0) content = 2;
    Poly f{Rational(content)};
    for (int i = 0, n = nfactors(rng); i < n; ++i) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& c : coeffs) c = Rational(coef(rng));
      coeffs.back() = Rational(1);
      Poly factor{std::move(coeffs)};
      for (int e = mult(rng); e > 0; --e) f = f * factor;
    }
    const auto dec = squarefree_decompose(f);
    CHECK(dec.reassemble() == f);
    // parts are pairwise coprime, squarefree, monic
    for (std::size_t i = 0; i < dec.parts.size(); ++i) {
      CHECK(dec.parts[i].factor.is_monic());
      CHECK(poly_gcd(dec.parts[i].factor, dec.parts[i].factor.derivative()).degree() == 0);
      for (std::size_t j = i + 1; j < dec.parts.size(); ++j)
        CHECK(poly_gcd(dec.parts[i].factor, dec.parts[j].factor).degree() == 0);
    }
  }
}

TEST_CASE("ratfunc reduction examples") {
  const Poly x = Poly::x();
  {
    const RatFunc f = ratfunc_reduce(x * x - Poly{Rational(1)}, x - Poly{Rational(1)});
    CHECK(f.num() == x + Poly{Rational(1)});
    CHECK(f.den() == Poly{Rational(1)});
  }
  {
    const RatFunc f = ratfunc_reduce(Poly{Rational(2)} * x, Poly{Rational(4)});
    CHECK(f.num() == Poly({Rational(0), Rational(1, 2)}));
    CHECK(f.den() == Poly{Rational(1)});
  }
  {
    const Poly q = x * x - Poly{Rational(8)};
    const RatFunc f = ratfunc_reduce(Poly{Rational(-4)} * q, q * q);
    CHECK(f.num() == Poly{Rational(-4)});
    CHECK(f.den() == q);
  }
  CHECK_THROWS_AS(ratfunc_reduce(Poly{Rational(1)}, Poly()), Error);
}

TEST_CASE("ratfunc reduction is idempotent and evaluation-stable") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> pt(-30, 30);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly num = random_poly(rng, 6, 12);
    Poly den = random_poly(rng, 5, 12);
    if (den.is_zero()) den = Poly{Rational(1)};
    const RatFunc f = ratfunc_reduce(num, den);
    const RatFunc again = ratfunc_reduce(f.num(), f.den());
    CHECK(f == again);
    int checked = 0;
    for (long k = 0; checked < 20 && k < 200; ++k) {
      const Rational t(pt(rng), 1 + (k % 3));
      if (den.eval(t).is_zero() || f.den().eval(t).is_zero()) continue;
      CHECK(f.eval(t) == num.eval(t) / den.eval(t));
      ++checked;
    }
  }
}

TEST_CASE("ratfunc arithmetic keeps canonical form") {
  const Poly x = Poly::x();
  const RatFunc f = ratfunc_reduce(Poly{Rational(1)}, x);
  const RatFunc g = ratfunc_reduce(Poly{Rational(1)}, x + Poly{Rational(1)});
  const RatFunc sum = f + g;
  CHECK(sum == ratfunc_reduce(Poly{Rational(2)} * x + Poly{Rational(1)}, x * x + x));
  CHECK(sum.den().is_monic());
  CHECK((f - f).is_zero());
  CHECK(f * g == ratfunc_reduce(Poly{Rational(1)}, x * x + x));
  CHECK(f / g == ratfunc_reduce(x + Poly{Rational(1)}, x));
  CHECK_THROWS_AS(f / RatFunc(), Error);
  CHECK(f.degree() == 1);
  CHECK(RatFunc(Rational(5)).is_constant());
  CHECK_FALSE(f.is_constant());
}

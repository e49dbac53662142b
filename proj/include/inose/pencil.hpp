#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "inose/errors.hpp"
#include "inose/poly.hpp"
#include "inose/ratfunc.hpp"
#include "inose/rational.hpp"

namespace inose {

// Integer coefficients (p, q, r, s) of a Mordell-Weil combination of the
// four generator sections.
struct Quadruple {
  long long p = 0, q = 0, r = 0, s = 0;

  bool operator==(const Quadruple& o) const = default;
  bool is_zero() const { return p == 0 && q == 0 && r == 0 && s == 0; }

  std::string to_string() const {
    return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
           std::to_string(s);
  }
};

// Validated Legendre parameters (a, b) of the two elliptic factors.
// Guarantees a, b outside {0, 1} and j(E_a) != j(E_b).
class PencilConfig {
 public:
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool operator==(const PencilConfig& o) const { return a_ == o.a_ && b_ == o.b_; }

  std::string to_string() const { return "(" + a_.to_string() + ", " + b_.to_string() + ")"; }

 private:
  PencilConfig(const Rational& a, const Rational& b) : a_(a), b_(b) {}
  friend PencilConfig validate_config(const Rational& a, const Rational& b);

  Rational a_;
  Rational b_;
};

inline PencilConfig validate_config(const Rational& a, const Rational& b) {
  const Rational zero(0), one(1);
  if (a == zero || a == one)
    fail(ErrorCode::DegenerateLegendre, "a = " + a.to_string() + " gives a singular cubic");
  if (b == zero || b == one)
    fail(ErrorCode::DegenerateLegendre, "b = " + b.to_string() + " gives a singular cubic");
  // The six fractional-linear images of a with the same j-invariant.
  const std::array<Rational, 6> orbit = {
      a, one - a, a.reciprocal(), (one - a).reciprocal(), (a - one) / a, a / (a - one)};
  for (const Rational& img : orbit) {
    if (b == img)
      fail(ErrorCode::IsomorphicFactors,
           "E_a and E_b are isomorphic for (a, b) = (" + a.to_string() + ", " + b.to_string() + ")");
  }
  return PencilConfig(a, b);
}

// Affine section of the pencil: a point (h1(t), h2(t)) of the plane cubic
//   t^2 x (x - 1) (x - a) = y (y - 1) (y - b)
// over Q(t). Instances always satisfy the pencil identity: the validating
// factory make_point is the only entry for untrusted coordinates, and the
// group law preserves the identity.
class PencilPoint {
 public:
  const RatFunc& h1() const { return h1_; }
  const RatFunc& h2() const { return h2_; }

  bool is_constant() const { return h1_.is_constant() && h2_.is_constant(); }

  bool operator==(const PencilPoint& o) const { return h1_ == o.h1_ && h2_ == o.h2_; }
  bool operator!=(const PencilPoint& o) const { return !(*this == o); }

  std::string to_string() const { return "(" + h1_.to_string() + ", " + h2_.to_string() + ")"; }

 private:
  struct Trusted {};
  PencilPoint(Trusted, RatFunc h1, RatFunc h2) : h1_(std::move(h1)), h2_(std::move(h2)) {}

  friend PencilPoint named_section(const PencilConfig&, int, int);
  friend PencilPoint make_point(const PencilConfig&, const RatFunc&, const RatFunc&);
  friend PencilPoint third_intersection(const PencilConfig&, const PencilPoint&,
                                        const PencilPoint&);

  RatFunc h1_;
  RatFunc h2_;
};

// True iff t^2 h1 (h1 - 1)(h1 - a) - h2 (h2 - 1)(h2 - b) vanishes
// identically. Cross-multiplied, so no gcd work is involved.
inline bool satisfies_pencil(const PencilConfig& cfg, const RatFunc& h1, const RatFunc& h2) {
  const Poly& n1 = h1.num();
  const Poly& d1 = h1.den();
  const Poly& n2 = h2.num();
  const Poly& d2 = h2.den();
  const Poly t2({Rational(0), Rational(0), Rational(1)});
  const Poly lhs = t2 * n1 * (n1 - d1) * (n1 - d1 * cfg.a()) * (d2 * d2 * d2);
  const Poly rhs = n2 * (n2 - d2) * (n2 - d2 * cfg.b()) * (d1 * d1 * d1);
  return lhs == rhs;
}

inline bool satisfies_pencil(const PencilConfig& cfg, const PencilPoint& point) {
  return satisfies_pencil(cfg, point.h1(), point.h2());
}

// The constant section A_ij = (alpha_i, beta_j), alpha = (0, 1, a),
// beta = (0, 1, b); A_11 = (0, 0) is the zero section.
inline PencilPoint named_section(const PencilConfig& cfg, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    fail(ErrorCode::InvalidSpec, "named section indices must lie in 1..3");
  const std::array<Rational, 3> alpha = {Rational(0), Rational(1), cfg.a()};
  const std::array<Rational, 3> beta = {Rational(0), Rational(1), cfg.b()};
  return PencilPoint(PencilPoint::Trusted{}, RatFunc(alpha[static_cast<std::size_t>(i - 1)]),
                     RatFunc(beta[static_cast<std::size_t>(j - 1)]));
}

inline PencilPoint pencil_zero(const PencilConfig& cfg) { return named_section(cfg, 1, 1); }

inline PencilPoint make_point(const PencilConfig& cfg, const RatFunc& h1, const RatFunc& h2) {
  if (!satisfies_pencil(cfg, h1, h2))
    fail(ErrorCode::NotOnPencil, "(" + h1.to_string() + ", " + h2.to_string() +
                                     ") does not satisfy the pencil identity");
  return PencilPoint(PencilPoint::Trusted{}, h1, h2);
}

namespace detail {

// Third intersection of the non-vertical line through P and Q (slope m)
// with the cubic, by Vieta on the x-coordinate cubic. The leading
// coefficient t^2 - m^3 never vanishes over Q(t).
inline void chord_with_slope(const PencilConfig& cfg, const RatFunc& m, const PencilPoint& P,
                             const PencilPoint& Q, RatFunc& x3, RatFunc& y3) {
  const RawFrac mf(m);
  const RawFrac px(P.h1()), py(P.h2()), qx(Q.h1());
  const RawFrac t2(Poly({Rational(0), Rational(0), Rational(1)}), Poly(Rational(1)));
  const RawFrac one_plus_a(Poly(Rational(1) + cfg.a()), Poly(Rational(1)));
  const RawFrac one_plus_b(Poly(Rational(1) + cfg.b()), Poly(Rational(1)));
  const RawFrac three(Poly(Rational(3)), Poly(Rational(1)));

  const RawFrac m2 = mf * mf;
  const RawFrac m3 = m2 * mf;
  const RawFrac c = py - mf * px;
  const RawFrac b_coeff = RawFrac() - one_plus_a * t2 - m2 * (three * c - one_plus_b);
  const RawFrac x3_raw = (RawFrac() - b_coeff) / (t2 - m3) - px - qx;
  x3 = x3_raw.to_ratfunc();
  const RawFrac y3_raw = mf * (RawFrac(x3) - px) + py;
  y3 = y3_raw.to_ratfunc();
}

}  // namespace detail

// Chord-and-tangent star operation: the third point where the line through
// P and Q (tangent when P = Q) meets the cubic. Always affine: the cubic's
// points at infinity are irrational over Q(t).
inline PencilPoint third_intersection(const PencilConfig& cfg, const PencilPoint& P,
                                      const PencilPoint& Q) {
  const Rational one(1);
  RatFunc x3, y3;
  if (P == Q) {
    const RatFunc& u = P.h1();
    const RatFunc& v = P.h2();
    // partial derivative numerators; F_x carries an extra factor t^2
    const Poly fx_num = Poly({Rational(0), Rational(0), Rational(1)}) *
                        (u.num() * u.num() * Rational(3) -
                         u.num() * u.den() * (Rational(2) * (one + cfg.a())) +
                         u.den() * u.den() * cfg.a());
    const Poly fy_num = v.num() * v.num() * Rational(3) -
                        v.num() * v.den() * (Rational(2) * (one + cfg.b())) +
                        v.den() * v.den() * cfg.b();
    if (fy_num.is_zero()) {
      if (fx_num.is_zero())
        fail(ErrorCode::SingularPoint, "tangent requested at a singular point");
      // vertical tangent: Vieta on the y-coordinate cubic
      x3 = u;
      y3 = RatFunc(Rational(1) + cfg.b()) - v - v;
    } else {
      // m = -F_x / F_y; the sign of F_y cancels the minus
      const RatFunc m =
          RatFunc::reduce(fx_num * (v.den() * v.den()), fy_num * (u.den() * u.den()));
      detail::chord_with_slope(cfg, m, P, Q, x3, y3);
    }
  } else if (P.h1() == Q.h1()) {
    // vertical chord: the x-coordinates agree identically
    x3 = P.h1();
    y3 = RatFunc(Rational(1) + cfg.b()) - P.h2() - Q.h2();
  } else {
    const detail::RawFrac dy = detail::RawFrac(P.h2()) - detail::RawFrac(Q.h2());
    const detail::RawFrac dx = detail::RawFrac(P.h1()) - detail::RawFrac(Q.h1());
    const RatFunc m = (dy / dx).to_ratfunc();
    detail::chord_with_slope(cfg, m, P, Q, x3, y3);
  }
  return PencilPoint(PencilPoint::Trusted{}, std::move(x3), std::move(y3));
}

// Mordell-Weil group law with the non-inflection zero section O = A_11:
// P + Q = O * (P * Q) and -P = P * (O * O), where * is third_intersection.
inline PencilPoint mw_add(const PencilConfig& cfg, const PencilPoint& P, const PencilPoint& Q) {
  return third_intersection(cfg, pencil_zero(cfg), third_intersection(cfg, P, Q));
}

inline PencilPoint mw_neg(const PencilConfig& cfg, const PencilPoint& P) {
  const PencilPoint o = pencil_zero(cfg);
  return third_intersection(cfg, P, third_intersection(cfg, o, o));
}

inline PencilPoint mw_scale(const PencilConfig& cfg, long long k, const PencilPoint& P) {
  if (k == 0) return pencil_zero(cfg);
  if (k < 0) return mw_neg(cfg, mw_scale(cfg, -k, P));
  PencilPoint acc = P;
  int top = 63;
  while (top > 0 && ((k >> top) & 1) == 0) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = mw_add(cfg, acc, acc);
    if ((k >> bit) & 1) acc = mw_add(cfg, acc, P);
  }
  return acc;
}

// P = p A_22 + q A_33 + r A_23 + s A_32 in the Mordell-Weil group.
inline PencilPoint section_from_quadruple(const PencilConfig& cfg, const Quadruple& quad) {
  PencilPoint acc = pencil_zero(cfg);
  const struct {
    long long coef;
    int i, j;
  } terms[] = {{quad.p, 2, 2}, {quad.q, 3, 3}, {quad.r, 2, 3}, {quad.s, 3, 2}};
  for (const auto& term : terms) {
    if (term.coef == 0) continue;
    acc = mw_add(cfg, acc, mw_scale(cfg, term.coef, named_section(cfg, term.i, term.j)));
  }
  return acc;
}

}  // namespace inose

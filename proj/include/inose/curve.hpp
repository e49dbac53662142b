#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "inose/errors.hpp"
#include "inose/lattice.hpp"
#include "inose/pencil.hpp"
#include "inose/poly.hpp"
#include "inose/ratfunc.hpp"

namespace inose {

// Intersection and height bookkeeping for one section.
struct IntersectionStats {
  int deg_h1 = 0;
  int deg_h2 = 0;
  std::array<std::array<long long, 3>, 3> named{};  // named[i-1][j-1] = P . A_ij
  long long sum_named = 0;
  Rational a00;      // P . A_00, derived from the three-section relation
  Rational total_D;  // P . D over all sixteen exceptional curves
  long long p_a11 = 0;
  int component_inf = 0;   // k with lim_{t->inf} h1 = alpha_k
  int component_zero = 0;  // j with h2(0) = beta_j
  Rational contr_zero;
  Rational contr_inf;
  Rational height;

  bool operator==(const IntersectionStats&) const = default;
};

struct HyperellipticModel {
  PencilConfig config;
  Quadruple quad;
  long long n = 0;
  Poly f;   // branch polynomial P1 (P1 - Q1)(P1 - a Q1) Q1
  Poly sf;  // content * odd-multiplicity part; the double cover is y^2 = sf
  Poly m;   // monic with f = sf * m^2
  long long branch_count = 0;
  long long genus = 0;
  RatFunc h1;
  RatFunc h2;
  RatFunc y_multiplier;  // m / Q1^2, the y-coordinate factor of the map to E_a
  IntersectionStats stats;
  bool genus_is_expected = false;
};

// Clear denominators in y^2 = h1 (h1 - 1)(h1 - a): with h1 = P1/Q1 reduced,
// multiplying y by Q1^2 turns the curve into y^2 = P1 (P1-Q1)(P1-aQ1) Q1.
inline Poly branch_polynomial(const PencilConfig& cfg, const RatFunc& h1) {
  if (h1.degree() < 1)
    fail(ErrorCode::ConstantSection, "branch polynomial of a constant section");
  const Poly& p1 = h1.num();
  const Poly& q1 = h1.den();
  return p1 * (p1 - q1) * (p1 - q1 * cfg.a()) * q1;
}

struct BranchCount {
  long long branch_count = 0;
  long long genus = 0;
};

// Branch points of y^2 = f are the odd-multiplicity places of f, plus the
// place at infinity when deg f is odd.
inline BranchCount genus_from_branch(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "branch analysis of the zero polynomial");
  if (f.degree() < 1) fail(ErrorCode::InvalidSpec, "branch analysis needs deg f >= 1");
  long long odd_degree = 0;
  for (const auto& part : squarefree_decompose(f).parts)
    if (part.multiplicity % 2 == 1) odd_degree += part.factor.degree();
  const long long branch = odd_degree + (f.degree() % 2);
  if (branch % 2 != 0)
    fail(ErrorCode::OddBranchParity, "odd number of branch points");
  return {branch, branch / 2 - 1};
}

namespace detail {

// lim_{t->inf} of a reduced rational function, when finite.
inline bool finite_limit_at_infinity(const RatFunc& h, Rational& out) {
  if (h.num().degree() > h.den().degree()) return false;
  out = (h.num().degree() < h.den().degree()) ? Rational(0)
                                              : h.num().leading() / h.den().leading();
  return true;
}

}  // namespace detail

// P . A_ij as a sum of gcd degrees: with N = numerator(h1 - alpha_i) =
// prod S_e^e and M = numerator(h2 - beta_j), the local multiplicities at
// the finite contact parameters add up to sum_e e * deg gcd(S_e, M). The
// two sections can also meet at the place t = infinity, where both limits
// degenerate to the 2-torsion pair; swapping the two factors turns that
// place into an ordinary one, and the contact order there is
// deg den(h2) - deg(num(h2) - beta_j den(h2)). No algebraic root is ever
// enumerated, only gcd and degree bookkeeping.
inline long long named_intersection(const PencilConfig& cfg, const PencilPoint& P, int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    fail(ErrorCode::InvalidSpec, "named intersection indices must lie in 1..3");
  const std::array<Rational, 3> alpha = {Rational(0), Rational(1), cfg.a()};
  const std::array<Rational, 3> beta = {Rational(0), Rational(1), cfg.b()};
  const Rational& a_i = alpha[static_cast<std::size_t>(i - 1)];
  const Rational& b_j = beta[static_cast<std::size_t>(j - 1)];
  const Poly n_poly = P.h1().num() - P.h1().den() * a_i;
  const Poly m_poly = P.h2().num() - P.h2().den() * b_j;
  const bool h1_matches = n_poly.is_zero();
  const bool h2_matches = m_poly.is_zero();
  if (h1_matches && h2_matches)
    fail(ErrorCode::SelfIntersectionRequest,
         "section coincides with A_" + std::to_string(i) + std::to_string(j));
  // A coordinate matching identically means P is a different constant
  // section; distinct constant sections are disjoint.
  if (h1_matches || h2_matches) return 0;

  long long total = 0;
  for (const auto& part : squarefree_decompose(n_poly).parts) {
    const int common = poly_gcd(part.factor, m_poly).degree();
    if (common > 0) total += static_cast<long long>(part.multiplicity) * common;
  }

  Rational lim1, lim2;
  if (detail::finite_limit_at_infinity(P.h1(), lim1) && lim1 == a_i &&
      detail::finite_limit_at_infinity(P.h2(), lim2) && lim2 == b_j)
    total += P.h2().den().degree() - m_poly.degree();
  return total;
}

struct ComponentClass {
  int inf_index = 0;   // F_k met at t = infinity
  int zero_index = 0;  // G_j met at t = 0
  Rational contr_inf;
  Rational contr_zero;

  bool operator==(const ComponentClass&) const = default;
};

// Which simple fiber components the section meets: lim_{t->inf} h1 picks
// F_k among {0, 1, a}, h2(0) picks G_j among {0, 1, b}. The fiber-local
// height correction is 0 on the identity component and 4/3 otherwise.
inline ComponentClass classify_components(const PencilConfig& cfg, const PencilPoint& P) {
  if (P.is_constant())
    fail(ErrorCode::InvalidSpec, "component classification needs a nonconstant section");
  ComponentClass out;

  const RatFunc& h1 = P.h1();
  if (h1.num().degree() > h1.den().degree())
    fail(ErrorCode::ComponentClassificationFailure, "h1 unbounded as t -> infinity");
  const Rational lim = (h1.num().degree() < h1.den().degree())
                           ? Rational(0)
                           : h1.num().leading() / h1.den().leading();
  if (lim == Rational(0)) out.inf_index = 1;
  else if (lim == Rational(1)) out.inf_index = 2;
  else if (lim == cfg.a()) out.inf_index = 3;
  else
    fail(ErrorCode::ComponentClassificationFailure,
         "lim h1 = " + lim.to_string() + " is not a 2-torsion abscissa");

  const RatFunc& h2 = P.h2();
  if (h2.has_pole_at(Rational(0)))
    fail(ErrorCode::ComponentClassificationFailure, "h2 has a pole at t = 0");
  const Rational at0 = h2.eval(Rational(0));
  if (at0 == Rational(0)) out.zero_index = 1;
  else if (at0 == Rational(1)) out.zero_index = 2;
  else if (at0 == cfg.b()) out.zero_index = 3;
  else
    fail(ErrorCode::ComponentClassificationFailure,
         "h2(0) = " + at0.to_string() + " is not a 2-torsion abscissa");

  out.contr_inf = (out.inf_index == 1) ? Rational(0) : Rational(4, 3);
  out.contr_zero = (out.zero_index == 1) ? Rational(0) : Rational(4, 3);
  return out;
}

// Build the full hyperelliptic model for the section of a quadruple and
// enforce the closed-form invariants. Each numbered check is a theorem for
// valid configs; a failure is an implementation bug, not bad input.
inline HyperellipticModel build_model(const PencilConfig& cfg, const Quadruple& quad) {
  const long long n = n_invariant(quad);
  if (n == 0)
    fail(ErrorCode::DegenerateSection, "n(p,q,r,s) = 0 yields a constant section");

  const auto check = [](bool ok, int which, const std::string& what) {
    if (!ok)
      fail(ErrorCode::InternalInvariantViolation,
           "model check (" + std::to_string(which) + ") failed: " + what);
  };

  const PencilPoint section = section_from_quadruple(cfg, quad);
  const RatFunc& h1 = section.h1();
  const RatFunc& h2 = section.h2();

  // (1) projection degrees
  check(h1.degree() == 2 * n && h2.degree() == 2 * n, 1, "deg h1 or deg h2 differs from 2n");

  const Poly f = branch_polynomial(cfg, h1);
  const auto decomposition = squarefree_decompose(f);
  Poly sf{decomposition.content};
  Poly m{Rational(1)};
  long long odd_degree = 0;
  for (const auto& part : decomposition.parts) {
    if (part.multiplicity % 2 == 1) {
      sf = sf * part.factor;
      odd_degree += part.factor.degree();
    }
    for (int k = 0; k < part.multiplicity / 2; ++k) m = m * part.factor;
  }
  const long long branch_count = odd_degree + (f.degree() % 2);
  if (branch_count % 2 != 0)
    fail(ErrorCode::OddBranchParity, "odd number of branch points");
  const long long genus = branch_count / 2 - 1;

  IntersectionStats stats;
  stats.deg_h1 = h1.degree();
  stats.deg_h2 = h2.degree();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const long long value = named_intersection(cfg, section, i, j);
      stats.named[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
      stats.sum_named += value;
    }

  // (2) the named sum determines P . D
  check(stats.sum_named == 6 * n - 2, 2, "sum of P . A_ij differs from 6n - 2");

  stats.total_D = Rational(2, 3) + Rational(4, 3) * Rational(stats.sum_named);
  stats.a00 = (Rational(2) + Rational(stats.sum_named)) / Rational(3);
  // (3) aggregate intersection numbers
  check(stats.total_D == Rational(8 * n - 2), 3, "P . D differs from 8n - 2");
  check(stats.a00.is_integer() && stats.a00 == Rational(2 * n), 3, "P . A_00 differs from 2n");

  const ComponentClass components = classify_components(cfg, section);
  stats.component_inf = components.inf_index;
  stats.component_zero = components.zero_index;
  stats.contr_inf = components.contr_inf;
  stats.contr_zero = components.contr_zero;
  stats.height = height_pairing(quad, quad);
  stats.p_a11 = stats.named[0][0];

  // (4) height vs intersection with the zero section
  check(Rational(stats.p_a11) ==
            stats.height / Rational(2) - Rational(2) + stats.contr_zero / Rational(2) +
                stats.contr_inf / Rational(2),
        4, "P . A_11 disagrees with the height formula");

  // (5) branch-point and genus bounds
  check(branch_count <= 8 * n - 2, 5, "more branch points than P . D allows");
  check(branch_count >= (n + 2) / 3 - 18, 5, "fewer branch points than the transversality bound");
  check(genus >= 1, 5, "genus below 1");
  check(6 * genus >= n - 60 && genus <= 4 * n - 2, 5, "genus outside [n/6 - 10, 4n - 2]");

  // (6) exact map identities
  const RatFunc y_multiplier = RatFunc::reduce(m, h1.den() * h1.den());
  check(f == sf * m * m, 6, "f != sf * m^2");
  check(RatFunc(sf) * y_multiplier * y_multiplier ==
            h1 * (h1 - RatFunc(Rational(1))) * (h1 - RatFunc(cfg.a())),
        6, "y-multiplier identity fails");
  check(satisfies_pencil(cfg, section), 6, "section violates the pencil identity");

  HyperellipticModel model{cfg,  quad, n,  f,  sf, m, branch_count,
                           genus, h1,  h2, y_multiplier, stats,
                           genus == 4 * n - 2};
  return model;
}

struct EllipticImage {
  bool at_infinity = false;
  Rational x;
  Rational y;

  bool operator==(const EllipticImage&) const = default;
};

struct WitnessRecord {
  Rational x;  // coordinate on the base line
  Rational y;  // with y^2 = sf(x); zero at Weierstrass points
  bool weierstrass = false;
  EllipticImage on_ea;
  EllipticImage on_eb;

  bool operator==(const WitnessRecord&) const = default;
};

namespace detail {

inline EllipticImage image_on_factor(const RatFunc& coordinate, const RatFunc& y_multiplier,
                                     const Rational& x, const Rational& y,
                                     bool multiply_by_x) {
  if (coordinate.has_pole_at(x)) return {true, Rational(0), Rational(0)};
  Rational yy = y * y_multiplier.eval(x);
  if (multiply_by_x) yy = yy * x;
  return {false, coordinate.eval(x), yy};
}

inline void verify_image(const EllipticImage& img, const Rational& lambda, bool weierstrass) {
  if (img.at_infinity) return;  // the origin, a 2-torsion point
  const Rational rhs = img.x * (img.x - Rational(1)) * (img.x - lambda);
  if (img.y * img.y != rhs)
    fail(ErrorCode::InternalInvariantViolation, "harvested point violates the Legendre equation");
  if (weierstrass) {
    const bool two_torsion =
        img.y.is_zero() &&
        (img.x == Rational(0) || img.x == Rational(1) || img.x == lambda);
    if (!two_torsion)
      fail(ErrorCode::InternalInvariantViolation,
           "Weierstrass point does not map to 2-torsion");
  }
}

}  // namespace detail

// Scan rational x = u/v with |u|, v <= bound (v >= 1, gcd(u, v) = 1) for
// points with sf(x) a rational square; emit each point together with its
// verified images on both elliptic factors.
inline std::vector<WitnessRecord> harvest_witnesses(const HyperellipticModel& model,
                                                    long long bound) {
  if (bound < 0) fail(ErrorCode::NegativeInput, "harvest bound must be nonnegative");
  std::vector<WitnessRecord> out;
  for (long long v = 1; v <= std::max<long long>(1, bound); ++v) {
    for (long long u = -bound; u <= bound; ++u) {
      if (std::gcd(u < 0 ? -u : u, v) != 1) continue;
      const Rational x(u, v);
      const Rational value = model.sf.eval(x);
      Rational y;
      const bool weierstrass = value.is_zero();
      if (!weierstrass) {
        if (!value.is_perfect_square()) continue;
        y = value.sqrt();
      }
      WitnessRecord rec;
      rec.x = x;
      rec.y = y;
      rec.weierstrass = weierstrass;
      rec.on_ea = detail::image_on_factor(model.h1, model.y_multiplier, x, y, false);
      rec.on_eb = detail::image_on_factor(model.h2, model.y_multiplier, x, y, true);
      detail::verify_image(rec.on_ea, model.config.a(), weierstrass);
      detail::verify_image(rec.on_eb, model.config.b(), weierstrass);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace inose

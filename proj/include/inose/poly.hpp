#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "inose/errors.hpp"
#include "inose/rational.hpp"

namespace inose {

// Dense univariate polynomial over the rationals, constant term first.
// Invariant: no trailing zero coefficients; degree of the zero polynomial
// is reported as -1 (the "minus infinity" sentinel).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT: implicit constant embedding
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

  static Poly x() { return Poly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Rational& coeff(int i) const {
    static const Rational kZero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  const Rational& leading() const {
    if (is_zero()) fail(ErrorCode::InternalInvariantViolation, "leading coefficient of zero");
    return c_.back();
  }

  bool is_monic() const { return !is_zero() && leading() == Rational(1); }

  Rational eval(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return Poly();
    return *this * leading().reciprocal();
  }

  Poly operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
  }

  Poly operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(std::move(r));
  }

  Poly operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return Poly(std::move(r));
  }

  // Multiplication runs over a common-denominator integer lift; schoolbook
  // convolution on mpz is much cheaper than per-coefficient mpq arithmetic.
  Poly operator*(const Poly& o) const;

  Poly operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    const int db = b.degree();
    if (a.degree() >= db) quo.assign(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    const Rational lead_inv = b.leading().reciprocal();
    while (static_cast<int>(rem.size()) - 1 >= db) {
      const Rational c = rem.back() * lead_inv;
      const std::size_t off = rem.size() - 1 - static_cast<std::size_t>(db);
      quo[off] = c;
      for (int i = 0; i <= db; ++i)
        rem[off + static_cast<std::size_t>(i)] -= c * b.c_[static_cast<std::size_t>(i)];
      while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeff(i);
      if (c.is_zero()) continue;
      if (!out.empty()) out += (c.sign() > 0) ? " + " : " - ";
      else if (c.sign() < 0) out += "-";
      const Rational a = c.abs();
      const bool unit = (a == Rational(1)) && i > 0;
      if (!unit) out += a.to_string();
      if (i > 0) {
        if (!unit) out += "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

// Exact quotient; the remainder must vanish.
inline Poly div_exact(const Poly& a, const Poly& b) {
  Poly q, r;
  Poly::divmod(a, b, q, r);
  if (!r.is_zero())
    fail(ErrorCode::InternalInvariantViolation, "expected exact polynomial division");
  return q;
}

namespace detail {

// ---------------------------------------------------------------------------
// Integer-polynomial machinery backing gcd and multiplication. Polynomials
// here are vectors of mpz, constant term first, no trailing zeros.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;

inline void zstrip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Common-denominator lift: f = (Z poly) / den with den > 0.
inline void lift_to_integers(const Poly& f, ZPoly& out, mpz_class& den) {
  den = 1;
  for (const Rational& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  out.clear();
  out.reserve(f.coeffs().size());
  for (const Rational& c : f.coeffs()) out.push_back(c.num() * (den / c.den()));
}

inline mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;  // 0 for the zero polynomial
}

// Divide out the content and force a positive leading coefficient.
inline void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  mpz_class g = zcontent(p);
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) c /= g;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  zstrip(out);
  return out;
}

// True iff d divides a exactly in Z[x]; synthetic division from the top with
// early abort on a non-integral quotient coefficient.
inline bool zdivides(const ZPoly& a, const ZPoly& d) {
  if (d.empty()) return a.empty();
  ZPoly r = a;
  zstrip(r);
  while (r.size() >= d.size()) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), d.back().get_mpz_t())) return false;
    const mpz_class q = r.back() / d.back();
    const std::size_t off = r.size() - d.size();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) r[off + i] -= q * d[i];
    r.pop_back();
    zstrip(r);
  }
  return r.empty();
}

// --- arithmetic modulo a 31-bit prime ---

using ModPoly = std::vector<std::uint32_t>;

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

inline void mstrip(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ModPoly reduce_mod(const ZPoly& a, std::uint32_t p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(a[i].get_mpz_t(), p));
  mstrip(out);
  return out;
}

inline void mod_rem_inplace(ModPoly& r, const ModPoly& d, std::uint32_t p) {
  const std::uint32_t inv_lead = mod_inv(d.back(), p);
  while (r.size() >= d.size()) {
    const std::uint32_t c = mod_mul(r.back(), inv_lead, p);
    const std::size_t off = r.size() - d.size();
    if (c != 0) {
      for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        const std::uint32_t t = mod_mul(c, d[i], p);
        r[off + i] = (r[off + i] >= t) ? r[off + i] - t : r[off + i] + p - t;
      }
    }
    r.pop_back();
    mstrip(r);
  }
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint32_t p) {
  mstrip(a);
  mstrip(b);
  while (!b.empty()) {
    mod_rem_inplace(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint32_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = mod_mul(c, inv, p);
  }
  return a;
}

// Deterministic Miller-Rabin, valid for all 32-bit inputs.
inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t base : {2u, 7u, 61u}) {
    std::uint64_t x = mod_pow(base % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint32_t next_prime_below(std::uint32_t n) {
  std::uint32_t c = (n % 2 == 0) ? n - 1 : n - 2;
  while (!is_prime_u32(c)) c -= 2;
  return c;
}

// Brown's modular gcd on primitive integer polynomials (both nonzero with
// positive leading coefficients). Returns the primitive gcd with positive
// leading coefficient. The first prime already certifies coprimality.
inline ZPoly modular_gcd_primitive(const ZPoly& a, const ZPoly& b) {
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  ZPoly crt;            // accumulated coefficients in [0, modulus)
  mpz_class modulus = 0;
  std::size_t deg_cur = 0;
  ZPoly prev_candidate;
  bool have_prev = false;

  std::uint32_t p = 0x7fffffff;  // 2^31 - 1, prime
  for (int rounds = 0; rounds < 20000; ++rounds, p = next_prime_below(p)) {
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0)
      continue;
    const ModPoly g = mod_gcd(reduce_mod(a, p), reduce_mod(b, p), p);
    if (g.size() == 1) return ZPoly{mpz_class(1)};

    // image of the gcd scaled to leading coefficient gamma
    const std::uint32_t gm = static_cast<std::uint32_t>(mpz_fdiv_ui(gamma.get_mpz_t(), p));
    ModPoly img(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) img[i] = mod_mul(g[i], gm, p);

    if (modulus == 0 || g.size() < deg_cur) {
      deg_cur = g.size();
      crt.assign(img.size(), mpz_class(0));
      for (std::size_t i = 0; i < img.size(); ++i) crt[i] = img[i];
      modulus = p;
      have_prev = false;
    } else if (g.size() == deg_cur) {
      const std::uint32_t m_mod_p = static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), p));
      const std::uint32_t inv = mod_inv(m_mod_p, p);
      for (std::size_t i = 0; i < crt.size(); ++i) {
        const std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(crt[i].get_mpz_t(), p));
        const std::uint32_t delta = (img[i] >= r) ? img[i] - r : img[i] + p - r;
        crt[i] += modulus * mod_mul(delta, inv, p);
      }
      modulus *= p;
    } else {
      continue;  // unlucky prime, degree too large
    }

    ZPoly candidate(crt.size());
    const mpz_class half = modulus / 2;
    for (std::size_t i = 0; i < crt.size(); ++i)
      candidate[i] = (crt[i] > half) ? mpz_class(crt[i] - modulus) : crt[i];

    if (have_prev && candidate == prev_candidate) {
      ZPoly w = candidate;
      make_primitive(w);
      if (zdivides(a, w) && zdivides(b, w)) return w;
    }
    prev_candidate = std::move(candidate);
    have_prev = true;
  }
  fail(ErrorCode::InternalInvariantViolation, "modular gcd did not converge");
}

}  // namespace detail

inline Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  detail::ZPoly a, b;
  mpz_class da, db;
  detail::lift_to_integers(*this, a, da);
  detail::lift_to_integers(o, b, db);
  const detail::ZPoly c = detail::zmul(a, b);
  const mpz_class den = da * db;
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& z : c) out.emplace_back(z, den);
  return Poly(std::move(out));
}

// Monic greatest common divisor over Q; gcd(0, 0) = 0.
inline Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return Poly();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.degree() == 0 || g.degree() == 0) return Poly(Rational(1));
  detail::ZPoly a, b;
  mpz_class den;
  detail::lift_to_integers(f, a, den);
  detail::lift_to_integers(g, b, den);
  detail::make_primitive(a);
  detail::make_primitive(b);
  const detail::ZPoly w = detail::modular_gcd_primitive(a, b);
  std::vector<Rational> coeffs;
  coeffs.reserve(w.size());
  for (const auto& z : w) coeffs.emplace_back(z);
  return Poly(std::move(coeffs)).monic();
}

struct SquarefreePart {
  Poly factor;       // monic, squarefree
  int multiplicity;  // >= 1
};

struct SquarefreeDecomposition {
  Rational content;                  // the leading coefficient of the input
  std::vector<SquarefreePart> parts; // pairwise coprime, multiplicities ascending

  Poly reassemble() const {
    Poly acc{content};
    for (const auto& part : parts)
      for (int i = 0; i < part.multiplicity; ++i) acc = acc * part.factor;
    return acc;
  }
};

// Yun's algorithm over Q: f = content * prod factor^multiplicity.
inline SquarefreeDecomposition squarefree_decompose(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  SquarefreeDecomposition out;
  out.content = f.leading();
  if (f.degree() == 0) return out;

  const Poly g = f.monic();
  const Poly gp = g.derivative();
  const Poly a0 = poly_gcd(g, gp);
  Poly b = div_exact(g, a0);
  Poly d = div_exact(gp, a0) - b.derivative();
  int multiplicity = 1;
  while (b.degree() > 0) {
    const Poly s = poly_gcd(b, d);
    if (s.degree() > 0) out.parts.push_back({s, multiplicity});
    b = div_exact(b, s);
    d = div_exact(d, s) - b.derivative();
    ++multiplicity;
  }
  return out;
}

}  // namespace inose

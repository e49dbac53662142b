#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "inose/errors.hpp"
#include "inose/poly.hpp"
#include "inose/rational.hpp"

namespace inose {

// Reduced rational function in one variable. Canonical form: gcd(num, den)
// = 1, den monic and nonzero, zero is 0/1. Equality is syntactic on the
// canonical form.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT: implicit scalar embedding
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}      // NOLINT: implicit poly embedding

  static RatFunc reduce(Poly num, Poly den) {
    if (den.is_zero())
      fail(ErrorCode::DivisionByZeroPolynomial, "rational function with zero denominator");
    if (num.is_zero()) return RatFunc();
    const Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = div_exact(num, g);
      den = div_exact(den, g);
    }
    const Rational lead_inv = den.leading().reciprocal();
    RatFunc out;
    out.num_ = num * lead_inv;
    out.den_ = den * lead_inv;
    return out;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  Rational constant_value() const {
    if (!is_constant())
      fail(ErrorCode::InternalInvariantViolation, "constant_value of a nonconstant function");
    return num_.coeff(0);
  }

  Rational eval(const Rational& t) const {
    const Rational d = den_.eval(t);
    if (d.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "evaluation at a pole");
    return num_.eval(t) / d;
  }

  bool has_pole_at(const Rational& t) const { return den_.eval(t).is_zero(); }

  RatFunc operator-() const {
    RatFunc out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }

  RatFunc operator+(const RatFunc& o) const {
    return reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const {
    return reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator*(const RatFunc& o) const { return reduce(num_ * o.num_, den_ * o.den_); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrorCode::DivisionByZeroPolynomial, "division by the zero function");
    return reduce(num_ * o.den_, den_ * o.num_);
  }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << f.to_string();
  }

 private:
  Poly num_;
  Poly den_;
};

inline RatFunc ratfunc_reduce(const Poly& num, const Poly& den) {
  return RatFunc::reduce(num, den);
}

namespace detail {

// Unreduced fraction of polynomials for intermediate chord-tangent algebra.
// No invariants; callers reduce once at the end. Keeps the number of big
// gcd computations per group-law step constant.
struct RawFrac {
  Poly n, d;

  RawFrac() : n(), d(Rational(1)) {}
  RawFrac(const Poly& num, const Poly& den) : n(num), d(den) {}
  explicit RawFrac(const RatFunc& f) : n(f.num()), d(f.den()) {}

  RawFrac operator+(const RawFrac& o) const { return {n * o.d + o.n * d, d * o.d}; }
  RawFrac operator-(const RawFrac& o) const { return {n * o.d - o.n * d, d * o.d}; }
  RawFrac operator*(const RawFrac& o) const { return {n * o.n, d * o.d}; }
  RawFrac operator/(const RawFrac& o) const { return {n * o.d, d * o.n}; }

  RatFunc to_ratfunc() const { return RatFunc::reduce(n, d); }
};

}  // namespace detail

}  // namespace inose

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "inose/errors.hpp"

namespace inose {

// Exact rational number. Canonical form is maintained at all times:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. Equality is syntactic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) { assign(num, den); }

  // Accepts "p" or "p/q" with optional leading '-'; canonicalizes.
  static Rational parse(const std::string& s) {
    const auto bad = [&] { fail(ErrorCode::InvalidSpec, "malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    const auto slash = s.find('/');
    const std::string num_part = s.substr(0, slash);
    if (!is_integer_literal(num_part)) bad();
    if (slash == std::string::npos) return Rational(mpz_class(num_part));
    const std::string den_part = s.substr(slash + 1);
    if (!is_integer_literal(den_part) || den_part[0] == '-') bad();
    mpz_class den(den_part);
    if (den == 0) bad();
    return Rational(mpz_class(num_part), den);
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) fail(ErrorCode::InternalInvariantViolation, "rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational reciprocal() const {
    if (is_zero()) fail(ErrorCode::InternalInvariantViolation, "reciprocal of zero");
    return Rational(mpq_class(1 / v_));
  }

  // True when this is the square of a rational (nonnegative, and both the
  // numerator and the denominator are perfect squares).
  bool is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(den().get_mpz_t()) != 0;
  }

  // Nonnegative square root; precondition is_perfect_square().
  Rational sqrt() const {
    if (!is_perfect_square())
      fail(ErrorCode::InternalInvariantViolation, "sqrt of a non-square rational");
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
    return Rational(n, d);
  }

  std::string to_string() const {
    std::string out = num().get_str();
    if (!is_integer()) out += "/" + den().get_str();
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(const mpq_class& v) : v_(v) { /* already canonical */ }

  void assign(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(ErrorCode::InternalInvariantViolation, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  mpq_class v_;
};

}  // namespace inose

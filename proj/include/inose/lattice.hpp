#pragma once

#include <array>
#include <cstdlib>

#include "inose/errors.hpp"
#include "inose/pencil.hpp"
#include "inose/rational.hpp"

namespace inose {

// n(p,q,r,s) = p(p-1) + q(q-1) + r(r-1) + s(s-1) + pq + rs. Nonnegative for
// all integer quadruples.
inline long long n_invariant(const Quadruple& v) {
  return v.p * (v.p - 1) + v.q * (v.q - 1) + v.r * (v.r - 1) + v.s * (v.s - 1) + v.p * v.q +
         v.r * v.s;
}

// Gram matrix of the canonical height pairing on the span of the four
// generator sections, in the order (p, q, r, s).
inline const std::array<std::array<Rational, 4>, 4>& height_gram() {
  static const std::array<std::array<Rational, 4>, 4> g = {{
      {Rational(4, 3), Rational(2, 3), Rational(0), Rational(0)},
      {Rational(2, 3), Rational(4, 3), Rational(0), Rational(0)},
      {Rational(0), Rational(0), Rational(4, 3), Rational(2, 3)},
      {Rational(0), Rational(0), Rational(2, 3), Rational(4, 3)},
  }};
  return g;
}

inline Rational height_pairing(const Quadruple& v, const Quadruple& w) {
  const std::array<long long, 4> a = {v.p, v.q, v.r, v.s};
  const std::array<long long, 4> b = {w.p, w.q, w.r, w.s};
  const auto& gram = height_gram();
  Rational acc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      acc += Rational(a[static_cast<std::size_t>(i)]) * gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             Rational(b[static_cast<std::size_t>(j)]);
  return acc;
}

// Sum of positive divisors, by trial division.
inline long long sigma1(long long n) {
  if (n <= 0) fail(ErrorCode::NegativeInput, "sigma1 needs a positive argument");
  long long total = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (d != n / d) total += n / d;
  }
  return total;
}

// |coefficient| <= 1 + ceil(sqrt(2n+2)) captures every representation of n.
inline long long enumeration_bound(long long n) {
  const long long target = 2 * n + 2;
  long long s = 0;
  while ((s + 1) * (s + 1) <= target) ++s;
  if (s * s < target) ++s;  // ceil
  return 1 + s;
}

struct RepresentationCount {
  long long brute = 0;    // exhaustive count of quadruples with n(p,q,r,s) = n
  long long formula = 0;  // 3 * sigma1(3n + 2)
};

inline RepresentationCount count_representations(long long n) {
  if (n < 0) fail(ErrorCode::NegativeInput, "representation count needs n >= 0");
  const long long bound = enumeration_bound(n);
  RepresentationCount out;
  for (long long p = -bound; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q)
      for (long long r = -bound; r <= bound; ++r)
        for (long long s = -bound; s <= bound; ++s)
          if (n_invariant({p, q, r, s}) == n) ++out.brute;
  out.formula = 3 * sigma1(3 * n + 2);
  return out;
}

// Lexicographically smallest quadruple with n(p,q,r,s) = n; the loop order
// makes the first hit the smallest.
inline Quadruple find_representation(long long n) {
  if (n < 1) fail(ErrorCode::NegativeInput, "representation search needs n >= 1");
  const long long bound = enumeration_bound(n);
  for (long long p = -bound; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q)
      for (long long r = -bound; r <= bound; ++r)
        for (long long s = -bound; s <= bound; ++s)
          if (n_invariant({p, q, r, s}) == n) return {p, q, r, s};
  fail(ErrorCode::InternalInvariantViolation,
       "every positive integer is representable; enumeration bound too small");
}

}  // namespace inose

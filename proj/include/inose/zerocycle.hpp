#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "inose/errors.hpp"
#include "inose/rational.hpp"

namespace inose {

using RationalVec = std::vector<Rational>;

// Integer vectors in Z^m, each asserting that the corresponding combination
// of the m generators is a hyperelliptic point.
struct WitnessSet {
  std::size_t m = 0;
  std::vector<std::vector<long long>> witnesses;
};

inline std::size_t sym_dim(std::size_t m) { return m * (m + 1) / 2; }

// Coordinates of the symmetrized tensor v.w in the basis {e_i e_j : i <= j}
// ordered lexicographically: entry v_i w_i on the diagonal and
// v_i w_j + v_j w_i off it.
inline RationalVec sym_square(const RationalVec& v, const RationalVec& w) {
  if (v.size() != w.size())
    fail(ErrorCode::LengthMismatch, "symmetric square of vectors of unequal length");
  RationalVec out;
  out.reserve(sym_dim(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j)
      out.push_back(i == j ? v[i] * w[i] : v[i] * w[j] + v[j] * w[i]);
  return out;
}

namespace detail {

inline RationalVec to_rational_vec(const std::vector<long long>& v) {
  RationalVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

inline RationalVec witness_square(const WitnessSet& set, std::size_t index) {
  const auto& w = set.witnesses[index];
  if (w.size() != set.m)
    fail(ErrorCode::LengthMismatch, "witness " + std::to_string(index) + " has length " +
                                        std::to_string(w.size()) + ", expected " +
                                        std::to_string(set.m));
  const RationalVec v = to_rational_vec(w);
  return sym_square(v, v);
}

// Exact Gauss elimination. Pivot choice: largest |numerator| in the column,
// ties broken by the lowest row index.
inline std::size_t pick_pivot(const std::vector<RationalVec>& rows, std::size_t from_row,
                              std::size_t col) {
  std::size_t best = rows.size();
  for (std::size_t r = from_row; r < rows.size(); ++r) {
    if (rows[r][col].is_zero()) continue;
    if (best == rows.size() ||
        mpz_cmpabs(rows[r][col].num().get_mpz_t(), rows[best][col].num().get_mpz_t()) > 0)
      best = r;
  }
  return best;  // rows.size() when the column is clear
}

// Reduces rows in place to echelon form over the first `cols` columns and
// returns the pivot columns in order.
inline std::vector<std::size_t> echelonize(std::vector<RationalVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    const std::size_t pivot = pick_pivot(rows, row, col);
    if (pivot == rows.size()) continue;
    std::swap(rows[row], rows[pivot]);
    const Rational inv = rows[row][col].reciprocal();
    for (std::size_t c = col; c < rows[row].size(); ++c) rows[row][c] = rows[row][c] * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < rows[r].size(); ++c)
        rows[r][c] = rows[r][c] - factor * rows[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace detail

// Rank over Q of the symmetric squares of the witnesses; the set spans
// Sym^2 Q^m exactly when this equals m(m+1)/2.
inline int span_rank(const WitnessSet& set) {
  std::vector<RationalVec> rows;
  rows.reserve(set.witnesses.size());
  for (std::size_t i = 0; i < set.witnesses.size(); ++i)
    rows.push_back(detail::witness_square(set, i));
  if (rows.empty()) return 0;
  return static_cast<int>(detail::echelonize(rows, sym_dim(set.m)).size());
}

// An exactly re-verifiable identity n * sym(c.d) = sum_i r_i * sym(w_i.w_i).
struct Certificate {
  mpz_class denominator;     // nonzero integer n
  RationalVec coefficients;  // r_i, aligned with the witness list
};

inline bool verify_certificate(const WitnessSet& set, const RationalVec& c, const RationalVec& d,
                               const Certificate& cert) {
  if (cert.denominator == 0 || cert.coefficients.size() != set.witnesses.size()) return false;
  const RationalVec target = sym_square(c, d);
  RationalVec total(target.size(), Rational(0));
  for (std::size_t i = 0; i < set.witnesses.size(); ++i) {
    if (cert.coefficients[i].is_zero()) continue;
    const RationalVec square = detail::witness_square(set, i);
    for (std::size_t k = 0; k < total.size(); ++k)
      total[k] += cert.coefficients[i] * square[k];
  }
  const Rational scale{cert.denominator};
  for (std::size_t k = 0; k < total.size(); ++k)
    if (total[k] != scale * target[k]) return false;
  return true;
}

// Decide whether sym(c.d) lies in the span of the witness squares. Returns
// a self-verified certificate on success and nullopt otherwise; nullopt is
// not a proof of nonvanishing.
inline std::optional<Certificate> certify_vanishing(const WitnessSet& set, const RationalVec& c,
                                                    const RationalVec& d) {
  if (c.size() != set.m || d.size() != set.m)
    fail(ErrorCode::LengthMismatch, "target vectors must have length m");
  const RationalVec target = sym_square(c, d);
  const std::size_t rows_n = target.size();
  const std::size_t unknowns = set.witnesses.size();

  // augmented system: columns are witness squares, last column the target
  std::vector<RationalVec> aug(rows_n, RationalVec(unknowns + 1, Rational(0)));
  for (std::size_t i = 0; i < unknowns; ++i) {
    const RationalVec square = detail::witness_square(set, i);
    for (std::size_t k = 0; k < rows_n; ++k) aug[k][i] = square[k];
  }
  for (std::size_t k = 0; k < rows_n; ++k) aug[k][unknowns] = target[k];

  const std::vector<std::size_t> pivots = detail::echelonize(aug, unknowns);

  // consistency: a zero coefficient row must have zero right-hand side
  for (std::size_t r = pivots.size(); r < rows_n; ++r)
    if (!aug[r][unknowns].is_zero()) return std::nullopt;

  RationalVec solution(unknowns, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) solution[pivots[k]] = aug[k][unknowns];

  Certificate cert;
  cert.denominator = 1;
  for (const Rational& s : solution)
    mpz_lcm(cert.denominator.get_mpz_t(), cert.denominator.get_mpz_t(), s.den().get_mpz_t());
  cert.coefficients.reserve(unknowns);
  const Rational scale{cert.denominator};
  for (const Rational& s : solution) cert.coefficients.push_back(s * scale);

  if (!verify_certificate(set, c, d, cert))
    fail(ErrorCode::InternalInvariantViolation, "certificate failed self-verification");
  return cert;
}

// The three tensors e1.e1, e2.e2, (m,n).(m,n) span Sym^2 Q^2 exactly when
// m n != 0.
inline bool abel_criterion(long long m, long long n) {
  const WitnessSet set{2, {{1, 0}, {0, 1}, {m, n}}};
  return span_rank(set) == 3;
}

}  // namespace inose

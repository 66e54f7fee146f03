#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cubicfrac/cubic.hpp"
#include "cubicfrac/matrix.hpp"
#include "cubicfrac/rational.hpp"

namespace cubicfrac {

// Bifurcating continued fraction [{a0, a1, ...}, {b0, b1, ...}] with rational
// partial quotients. A periodic fraction stores preperiod + period entries;
// index n >= preperiod resolves to preperiod + (n - preperiod) mod period.
class Bcf {
 public:
  Bcf() = default;

  static Bcf finite(std::vector<Rational> a, std::vector<Rational> b);
  static Bcf periodic(std::vector<Rational> a, std::vector<Rational> b, std::size_t preperiod_len,
                      std::size_t period_len);

  const Rational& a(std::size_t n) const { return a_[resolve(n)]; }
  const Rational& b(std::size_t n) const { return b_[resolve(n)]; }

  // True when index n has a partial quotient (always for periodic fractions).
  bool resolvable(std::size_t n) const { return period_ > 0 || n < a_.size(); }

  bool is_periodic() const { return period_ > 0; }
  std::size_t preperiod_len() const { return preperiod_; }
  std::size_t period_len() const { return period_; }
  std::size_t stored_len() const { return a_.size(); }

  const std::vector<Rational>& a_seq() const { return a_; }
  const std::vector<Rational>& b_seq() const { return b_; }

  // New fraction with the given quotient pairs prepended; the period is kept.
  Bcf with_prefix(std::span<const Rational> a, std::span<const Rational> b) const;

  friend bool operator==(const Bcf&, const Bcf&) = default;

 private:
  std::size_t resolve(std::size_t n) const;

  std::vector<Rational> a_;
  std::vector<Rational> b_;
  std::size_t preperiod_ = 0;
  std::size_t period_ = 0;
};

// (A_n, B_n, C_n): the n-th convergent is (A_n/C_n, B_n/C_n).
struct ConvergentTriple {
  Rational A;
  Rational B;
  Rational C;
  std::size_t index = 0;

  friend bool operator==(const ConvergentTriple&, const ConvergentTriple&) = default;
};

// Triples for indices 0..n via A_k = a_k A_{k-1} + b_k A_{k-2} + A_{k-3}
// (likewise B, C) seeded from the single-step matrix.
std::vector<ConvergentTriple> convergents(const Bcf& f, std::size_t n);

// Product of the step matrices for indices 0..n. Columns are the triples
// n, n-1, n-2.
Matrix3 matrix_product(const Bcf& f, std::size_t n);

// Product of the step matrices over one period, starting at the preperiod.
Matrix3 period_matrix(const Bcf& f);

// A partial quotient written as num/den, not necessarily reduced.
struct QuotientForm {
  BigInt num;
  BigInt den;
};

// Integer numerator/denominator sequences with A_n = s_n/t_n,
// B_n = sp_n/tp_n and C_n = spp_n/tpp_n.
struct LemmaSequences {
  std::vector<BigInt> s, sp, spp;
  std::vector<BigInt> t, tp, tpp;
};

// `first[i]` is the quotient a_i written as a_i/b_i, `second[i]` the quotient
// b_i written as c_i/d_i. Indices 0..n must be present.
LemmaSequences lemma_sequences(std::span<const QuotientForm> first,
                               std::span<const QuotientForm> second, std::size_t n);

// Uses the reduced numerator/denominator of each stored quotient.
LemmaSequences lemma_sequences(const Bcf& f, std::size_t n);

using CubicPair = std::pair<CubicNumber, CubicNumber>;

// Complete quotients (x_k, y_k) for k = 0..n (entry 0 is `value`), obtained
// from x_{k+1} = 1/(y_k - b_k), y_{k+1} = (x_k - a_k)/(y_k - b_k).
std::vector<CubicPair> tail_states(const Bcf& f, const CubicPair& value, std::size_t n);

// Exact check of α = (αA_n + βA_{n-1} + A_{n-2})/(αC_n + βC_{n-1} + C_{n-2})
// and the matching identity for β, where the columns of `period` are the
// triples n, n-1, n-2 of one period.
bool fixed_point_check(const Matrix3& period, const CubicNumber& alpha, const CubicNumber& beta);

// Coefficients of det(xI - M), lowest degree first; the last entry is 1.
std::array<Rational, 4> characteristic_poly(const Matrix3& m);

// The depth-th convergent (A/C, B/C). Throws DomainError when C = 0.
std::pair<Rational, Rational> evaluate_numeric(const Bcf& f, std::size_t depth);

}  // namespace cubicfrac

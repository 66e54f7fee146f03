#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubicfrac/bcf.hpp"
#include "cubicfrac/cubic.hpp"
#include "cubicfrac/matrix.hpp"
#include "cubicfrac/rational.hpp"

namespace cubicfrac {

// The periodic fraction
//   [{z, 2z/d, (3dz/(z³+d²), 3z, 3z/d)}, {0, -z²/d, (-3z²/(z³+d²), -3dz²/(z³+d²), -3z²/d)}]
// converging to (∛d², ∛d) with preperiod 2 and period 3.
struct TheoremFraction {
  BigInt d;
  BigInt z;
  Bcf fraction;
  // The five quotient pairs exactly as written above (not reduced); the
  // numerator/denominator identities below are stated for these forms.
  std::array<QuotientForm, 5> displayed_a;
  std::array<QuotientForm, 5> displayed_b;

  // Displayed forms for indices 0..n, following the period.
  std::vector<QuotientForm> forms_a(std::size_t n) const;
  std::vector<QuotientForm> forms_b(std::size_t n) const;
};

// Throws DomainError for z = 0, d < 2, d a perfect cube or z³ + d² = 0.
TheoremFraction build_theorem_bcf(const BigInt& d, const BigInt& z);

struct IdentityCheck {
  std::size_t n = 0;
  // False when a denominator vanishes at this index; such checks are
  // reported but not counted as failures.
  bool defined = true;
  bool pass = false;
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  std::string note;
};

struct VerificationReport {
  std::string name;
  BigInt d;
  BigInt z;
  std::size_t n_max = 0;
  std::vector<IdentityCheck> checks;

  std::size_t failures() const;
  std::size_t undefined() const;
  std::optional<std::size_t> first_failure() const;
  bool passed() const { return failures() == 0; }
};

// Checks (A_n/C_n, B_n/C_n) = (μ_{n+1}(0)/μ_{n+1}(2), μ_{n+1}(1)/μ_{n+1}(2))
// exactly for n = 0..n_max.
VerificationReport verify_mu_convergents(const BigInt& d, const BigInt& z, std::size_t n_max);

// Checks, for n = 2..n_max,
//   s_n   = d^⌊2(n+1)/3⌋ (d²+z³)^⌊2n/3⌋ μ_{n+1}(0)
//   s'_n  = d^⌊(2n-1)/3⌋ (d²+z³)^⌊2n/3⌋ μ_{n+1}(1)
//   d s''_n = d^⌊2(n+1)/3⌋ (d²+z³)^⌊2n/3⌋ μ_{n+1}(2)
// using the Lemma sequences of the displayed quotient forms.
VerificationReport sn_mu_identity(const BigInt& d, const BigInt& z, std::size_t n_max);

// ((a00∛d² + a01∛d + a02)/(a20∛d² + a21∛d + a22), (a10∛d² + a11∛d + a12)/(same)).
CubicPair transform_limits(const Matrix3& m, const Radicand& d);

// M · (A_k, B_k, C_k) for k = 0..n.
std::vector<ConvergentTriple> transformed_convergents(const Matrix3& m, const Bcf& f, std::size_t n);

struct FourMatrixRows {
  std::array<Rational, 3> row1;
  std::array<Rational, 3> row3;
};

// First and third rows of the product of four step matrices, from their
// closed forms in the quotients.
FourMatrixRows four_matrix_rows(const std::array<Rational, 4>& a, const std::array<Rational, 4>& b);

struct FourMatrixSolution {
  std::array<Rational, 4> a;
  std::array<Rational, 4> b;
  // Names of the reference closed-form expressions (a2, a3, b2, b3) that do
  // not reproduce this solution.
  std::vector<std::string> closed_form_mismatches;
};

struct FourMatrixOutcome {
  std::optional<FourMatrixSolution> solution;
  // Why no unique solution exists: "underdetermined" when the equations
  // admit a family of solutions, "no solution" when they are inconsistent.
  std::string reason;

  bool feasible() const { return solution.has_value(); }
};

// Solves for quotients with a0 = b0 = 1 whose four-matrix product matches the
// first and third rows of m. The solution is validated by reconstruction.
FourMatrixOutcome four_matrix_solve(const Matrix3& m);

struct PairedFraction {
  Bcf fraction;
  Matrix3 prefix_matrix;  // product of the prefix step matrices (identity if none)
  CubicPair limits;
  std::optional<FourMatrixSolution> prefix;
};

// Prefixes the solved quotients of m to the theorem fraction for (d, z). With
// no matrix the theorem fraction is returned unchanged. Throws DomainError when
// the solve is infeasible.
PairedFraction paired_periodic_bcf(const std::optional<Matrix3>& m, const BigInt& d,
                                   const BigInt& z);

}  // namespace cubicfrac

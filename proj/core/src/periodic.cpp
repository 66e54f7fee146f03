#include "cubicfrac/periodic.hpp"

#include <algorithm>

#include "cubicfrac/error.hpp"
#include "cubicfrac/redei.hpp"

namespace cubicfrac {
namespace {

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::size_t resolve_theorem_index(std::size_t n) { return n < 2 ? n : 2 + (n - 2) % 3; }

}  // namespace

std::vector<QuotientForm> TheoremFraction::forms_a(std::size_t n) const {
  std::vector<QuotientForm> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(displayed_a[resolve_theorem_index(i)]);
  return out;
}

std::vector<QuotientForm> TheoremFraction::forms_b(std::size_t n) const {
  std::vector<QuotientForm> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(displayed_b[resolve_theorem_index(i)]);
  return out;
}

TheoremFraction build_theorem_bcf(const BigInt& d, const BigInt& z) {
  const Radicand checked(d);
  if (z == 0) throw DomainError("z=0 is not allowed");
  const BigInt w = z * z * z + d * d;
  if (w == 0) throw DomainError("z^3 + d^2 = 0");

  TheoremFraction t;
  t.d = d;
  t.z = z;
  t.displayed_a = {QuotientForm{z, 1}, {2 * z, d}, {3 * d * z, w}, {3 * z, 1}, {3 * z, d}};
  t.displayed_b = {QuotientForm{0, 1}, {-z * z, d}, {-3 * z * z, w}, {-3 * d * z * z, w},
                   {-3 * z * z, d}};
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i < 5; ++i) {
    a.emplace_back(t.displayed_a[i].num, t.displayed_a[i].den);
    b.emplace_back(t.displayed_b[i].num, t.displayed_b[i].den);
  }
  t.fraction = Bcf::periodic(std::move(a), std::move(b), 2, 3);
  return t;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const IdentityCheck& c) { return c.defined && !c.pass; }));
}

std::size_t VerificationReport::undefined() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.defined; }));
}

std::optional<std::size_t> VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.defined && !c.pass) return c.n;
  }
  return std::nullopt;
}

VerificationReport verify_mu_convergents(const BigInt& d, const BigInt& z, std::size_t n_max) {
  const TheoremFraction t = build_theorem_bcf(d, z);
  VerificationReport r{"mu_convergents", d, z, n_max, {}};
  const auto triples = convergents(t.fraction, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    IdentityCheck c;
    c.n = n;
    const auto mu = mu_coords(3, d, z, n + 1);
    const auto& tr = triples[n];
    if (tr.C.is_zero() && mu[2] == 0) {
      c.defined = false;
      c.note = "C_n = 0 and mu_{n+1}(2) = 0";
    } else if (tr.C.is_zero() || mu[2] == 0) {
      c.note = tr.C.is_zero() ? "C_n = 0 but mu_{n+1}(2) != 0" : "mu_{n+1}(2) = 0 but C_n != 0";
    } else {
      c.lhs = {tr.A / tr.C, tr.B / tr.C};
      c.rhs = {Rational(mu[0], mu[2]), Rational(mu[1], mu[2])};
      c.pass = c.lhs == c.rhs;
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

VerificationReport sn_mu_identity(const BigInt& d, const BigInt& z, std::size_t n_max) {
  if (n_max < 2) throw DomainError("the identities are stated for n >= 2; n_max must be >= 2");
  const TheoremFraction t = build_theorem_bcf(d, z);
  VerificationReport r{"sn_mu_identity", d, z, n_max, {}};
  const LemmaSequences seq = lemma_sequences(t.forms_a(n_max), t.forms_b(n_max), n_max);
  const BigInt w = d * d + z * z * z;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto mu = mu_coords(3, d, z, n + 1);
    const BigInt wpow = ipow(w, 2 * n / 3);
    const BigInt lead = ipow(d, 2 * (n + 1) / 3) * wpow;
    IdentityCheck c;
    c.n = n;
    c.lhs = {Rational(seq.s[n]), Rational(seq.sp[n]), Rational(BigInt(d * seq.spp[n]))};
    c.rhs = {Rational(BigInt(lead * mu[0])), Rational(BigInt(ipow(d, (2 * n - 1) / 3) * wpow * mu[1])),
             Rational(BigInt(lead * mu[2]))};
    c.pass = c.lhs == c.rhs;
    r.checks.push_back(std::move(c));
  }
  return r;
}

CubicPair transform_limits(const Matrix3& m, const Radicand& d) {
  auto row = [&](int i) { return CubicNumber(d, m(i, 2), m(i, 1), m(i, 0)); };
  const CubicNumber den = row(2);
  if (den.is_zero()) throw DomainError("zero denominator a20*cbrt(d)^2 + a21*cbrt(d) + a22");
  const CubicNumber inv = den.inverse();
  return {row(0) * inv, row(1) * inv};
}

std::vector<ConvergentTriple> transformed_convergents(const Matrix3& m, const Bcf& f, std::size_t n) {
  std::vector<ConvergentTriple> out;
  for (const auto& t : convergents(f, n)) {
    auto row = [&](int i) { return m(i, 0) * t.A + m(i, 1) * t.B + m(i, 2) * t.C; };
    out.push_back({row(0), row(1), row(2), t.index});
  }
  return out;
}

FourMatrixRows four_matrix_rows(const std::array<Rational, 4>& a, const std::array<Rational, 4>& b) {
  const auto& [a0, a1, a2, a3] = a;
  const auto& [b0, b1, b2, b3] = b;
  (void)b0;  // b0 only enters the second row
  FourMatrixRows r;
  r.row1 = {a0 + a3 + a0 * a1 * a2 * a3 + a2 * a3 * b1 + a0 * a3 * b2 + a0 * a1 * b3 + b1 * b3,
            Rational(1) + a0 * a1 * a2 + a2 * b1 + a0 * b2, a0 * a1 + b1};
  r.row3 = {Rational(1) + a1 * a2 * a3 + a3 * b2 + a1 * b3, a1 * a2 + b2, a1};
  return r;
}

FourMatrixOutcome four_matrix_solve(const Matrix3& m) {
  const Rational& a00 = m(0, 0);
  const Rational& a01 = m(0, 1);
  const Rational& a02 = m(0, 2);
  const Rational& a20 = m(2, 0);
  const Rational& a21 = m(2, 1);
  const Rational& a22 = m(2, 2);

  FourMatrixSolution s;
  s.a[0] = 1;
  s.b[0] = 1;
  s.a[1] = a22;
  s.b[1] = a02 - a22;
  if (s.b[1].is_zero()) {
    // Row 1 minus row 3 in the middle column reduces to a01 - a21 = 1.
    return {std::nullopt, a01 - a21 == Rational(1) ? "a22 = a02: a2 is underdetermined"
                                                   : "a22 = a02: no solution for a2"};
  }
  // Row 1 minus row 3 in the middle column: a01 - a21 = 1 + a2*b1.
  s.a[2] = (a01 - a21 - Rational(1)) / s.b[1];
  s.b[2] = a21 - s.a[1] * s.a[2];
  // Remaining first-column equations are linear in (a3, b3):
  //   a21*a3 + a22*b3 = a20 - 1,  a01*a3 + a02*b3 = a00 - 1.
  const Rational det = a02 * a21 - a01 * a22;
  if (det.is_zero()) {
    // Rank-deficient: consistent iff the augmented 2x2 minor also vanishes.
    const bool consistent = a21 * (a00 - Rational(1)) == a01 * (a20 - Rational(1)) &&
                            a22 * (a00 - Rational(1)) == a02 * (a20 - Rational(1));
    return {std::nullopt, consistent ? "a02*a21 - a01*a22 = 0: a3, b3 are underdetermined"
                                     : "a02*a21 - a01*a22 = 0: no solution for a3, b3"};
  }
  s.a[3] = ((a20 - Rational(1)) * a02 - a22 * (a00 - Rational(1))) / det;
  s.b[3] = (a21 * (a00 - Rational(1)) - a01 * (a20 - Rational(1))) / det;

  const FourMatrixRows rows = four_matrix_rows(s.a, s.b);
  for (int j = 0; j < 3; ++j) {
    if (rows.row1[j] != m(0, j) || rows.row3[j] != m(2, j)) {
      return {std::nullopt, "reconstruction does not reproduce rows 1 and 3"};
    }
  }

  // Reference closed forms, compared against the validated solution.
  const Rational den2 = a22 - a02;
  const Rational den3 = a02 * a21 - a01 * a22;
  if ((Rational(1) - a01 + a21) / den2 != s.a[2]) s.closed_form_mismatches.emplace_back("a2");
  if ((a22 - a00 * a22 + a02 * a20 - a22) / den3 != s.a[3]) s.closed_form_mismatches.emplace_back("a3");
  if ((a01 * a22 - a22 - a02 * a21) / den2 != s.b[2]) s.closed_form_mismatches.emplace_back("b2");
  if ((a21 - a00 * a21 + a01 * a20 - a01) / (-den3) != s.b[3]) {
    s.closed_form_mismatches.emplace_back("b3");
  }
  return {std::move(s), {}};
}

PairedFraction paired_periodic_bcf(const std::optional<Matrix3>& m, const BigInt& d,
                                   const BigInt& z) {
  const TheoremFraction t = build_theorem_bcf(d, z);
  const Radicand rad(d);
  if (!m) {
    return {t.fraction, Matrix3::identity(), transform_limits(Matrix3::identity(), rad), std::nullopt};
  }
  FourMatrixOutcome outcome = four_matrix_solve(*m);
  if (!outcome.feasible()) throw DomainError("four-matrix solve infeasible: " + outcome.reason);
  const FourMatrixSolution& s = *outcome.solution;
  Matrix3 prefix = Matrix3::identity();
  for (int i = 0; i < 4; ++i) prefix = prefix * step_matrix(s.a[i], s.b[i]);
  return {t.fraction.with_prefix(s.a, s.b), prefix, transform_limits(prefix, rad), s};
}

}  // namespace cubicfrac

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubicfrac/cubic.hpp"
#include "cubicfrac/rational.hpp"

namespace cubicfrac {

// (z + √d)^n = N + D·√d.
struct RedeiPair {
  unsigned long n = 0;
  BigInt d;
  Rational z;
  Rational N;
  Rational D;
};

// Binomial sums N_n = Σ C(n,2k) d^k z^(n-2k), D_n = Σ C(n,2k+1) d^k z^(n-2k-1).
// Requires n >= 1 and d >= 2 not a perfect square.
RedeiPair redei_classic(const BigInt& d, const Rational& z, unsigned long n);

// Q_n(d, z) = N_n/D_n. Throws DomainError when D_n(d, z) = 0.
Rational redei_q(const BigInt& d, const Rational& z, unsigned long n);

// Coefficient of d^(k/e) in (z + d^((e-1)/e))^n.
struct MuValue {
  unsigned e = 0;
  unsigned k = 0;
  BigInt d;
  BigInt z;
  unsigned long n = 0;
  BigInt value;
};

// Σ_h C(n, eh-k) d^((e-1)h-k) z^(n-eh+k); terms with eh-k outside [0, n] are
// zero. Requires e >= 2, k < e and d >= 2 not a perfect e-th power.
MuValue mu_sum(unsigned e, unsigned k, const BigInt& d, const BigInt& z, unsigned long n);

// μ_n(e, k, d, z) for k = 0..e-1.
std::vector<BigInt> mu_coords(unsigned e, const BigInt& d, const BigInt& z, unsigned long n);

using IntMatrix = std::vector<std::vector<BigInt>>;

// Companion-style e×e matrix: z on the diagonal, d on the superdiagonal, 1 in
// the bottom-left corner.
IntMatrix mu_base_matrix(unsigned e, const BigInt& d, const BigInt& z);

// n-th power of mu_base_matrix; its first column is μ_n(0..e-1).
IntMatrix mu_matrix(unsigned e, const BigInt& d, const BigInt& z, unsigned long n);

struct MuLimitReport {
  unsigned e = 0;
  unsigned k = 0;
  BigInt d;
  BigInt z;
  unsigned long n_max = 0;
  // ratios[n] = μ_n(k)/μ_n(e-1), empty where the denominator vanishes.
  std::vector<std::optional<Rational>> ratios;
  std::vector<unsigned long> zero_denominators;
  // Enclosure of the limit d^((e-k-1)/e).
  Enclosure target;
  // Upper bound on |ratio_{n_max} - limit|; empty when the last ratio is undefined.
  std::optional<Rational> deviation;
  Rational tolerance;
  bool within_tolerance = false;
};

MuLimitReport mu_limit_check(unsigned e, const BigInt& d, const BigInt& z, unsigned k,
                             unsigned long n_max, const Rational& tol);

struct RedeiPermutation {
  bool permutes = false;
  unsigned long gcd = 0;  // gcd(n, q + 1)
  // z in F_q with D_n(d, z) = 0, i.e. the points sent to infinity.
  std::vector<unsigned long> poles;
};

// Evaluates z ↦ N_n(d,z)/D_n(d,z) on the projective line F_q ∪ {∞} and reports
// whether it is a bijection. Requires q an odd prime, d a quadratic non-residue
// mod q and n >= 1.
RedeiPermutation redei_permutes(unsigned long q, long d, unsigned long n);

bool is_quadratic_residue(long d, unsigned long q);

}  // namespace cubicfrac

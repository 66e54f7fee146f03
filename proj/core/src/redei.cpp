#include "cubicfrac/redei.hpp"

#include <numeric>
#include <string>

#include "cubicfrac/error.hpp"

namespace cubicfrac {
namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void check_mu_domain(unsigned e, unsigned k, const BigInt& d) {
  if (e < 2) throw DomainError("e=" + std::to_string(e) + " must be >= 2");
  if (k >= e) throw DomainError("k=" + std::to_string(k) + " must be < e=" + std::to_string(e));
  if (d < 2) throw DomainError("d=" + d.get_str() + " must be >= 2");
  if (is_perfect_power(d, e)) {
    const std::string kind = e == 2 ? "square" : (e == 3 ? "cube" : std::to_string(e) + "th power");
    throw DomainError("d=" + d.get_str() + " is a perfect " + kind);
  }
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t e = a.size();
  IntMatrix r(e, std::vector<BigInt>(e));
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t k = 0; k < e; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < e; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

using u64 = unsigned long long;
// Operands are below q < 2^32, so products fit in 64 bits.
u64 mulmod(u64 a, u64 b, u64 q) { return a * b % q; }

u64 powmod(u64 base, u64 e, u64 q) {
  u64 r = 1 % q;
  base %= q;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, q);
    base = mulmod(base, base, q);
    e >>= 1;
  }
  return r;
}

u64 reduce(long v, u64 q) {
  const long m = v % static_cast<long>(q);
  return static_cast<u64>(m < 0 ? m + static_cast<long>(q) : m);
}

}  // namespace

RedeiPair redei_classic(const BigInt& d, const Rational& z, unsigned long n) {
  if (n < 1) throw DomainError("Redei functions need n >= 1");
  if (d < 2) throw DomainError("d=" + d.get_str() + " must be >= 2");
  if (is_perfect_power(d, 2)) throw DomainError("d=" + d.get_str() + " is a perfect square");
  RedeiPair r{n, d, z, 0, 0};
  for (unsigned long k = 0; 2 * k <= n; ++k) {
    const Rational dk(ipow(d, k));
    r.N += Rational(binomial(n, 2 * k)) * dk * z.pow(n - 2 * k);
    if (2 * k + 1 <= n) r.D += Rational(binomial(n, 2 * k + 1)) * dk * z.pow(n - 2 * k - 1);
  }
  return r;
}

Rational redei_q(const BigInt& d, const Rational& z, unsigned long n) {
  const RedeiPair p = redei_classic(d, z, n);
  if (p.D.is_zero()) {
    throw DomainError("D_" + std::to_string(n) + "(" + d.get_str() + ", " + z.str() + ") = 0");
  }
  return p.N / p.D;
}

MuValue mu_sum(unsigned e, unsigned k, const BigInt& d, const BigInt& z, unsigned long n) {
  check_mu_domain(e, k, d);
  MuValue out{e, k, d, z, n, 0};
  // h = 0 contributes only when k = 0; for h >= 1 the d-exponent is >= e-1-k >= 0.
  for (unsigned long h = (k == 0 ? 0 : 1);; ++h) {
    const unsigned long j = e * h - k;
    if (j > n) break;
    out.value += binomial(n, j) * ipow(d, (e - 1) * h - k) * ipow(z, n - j);
  }
  return out;
}

std::vector<BigInt> mu_coords(unsigned e, const BigInt& d, const BigInt& z, unsigned long n) {
  std::vector<BigInt> out;
  for (unsigned k = 0; k < e; ++k) out.push_back(mu_sum(e, k, d, z, n).value);
  return out;
}

IntMatrix mu_base_matrix(unsigned e, const BigInt& d, const BigInt& z) {
  check_mu_domain(e, 0, d);
  IntMatrix m(e, std::vector<BigInt>(e));
  for (unsigned i = 0; i < e; ++i) {
    m[i][i] = z;
    if (i + 1 < e) m[i][i + 1] = d;
  }
  m[e - 1][0] += 1;
  return m;
}

IntMatrix mu_matrix(unsigned e, const BigInt& d, const BigInt& z, unsigned long n) {
  IntMatrix base = mu_base_matrix(e, d, z);
  IntMatrix result(e, std::vector<BigInt>(e));
  for (unsigned i = 0; i < e; ++i) result[i][i] = 1;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

MuLimitReport mu_limit_check(unsigned e, const BigInt& d, const BigInt& z, unsigned k,
                             unsigned long n_max, const Rational& tol) {
  check_mu_domain(e, k, d);
  if (n_max < 3) throw DomainError("n_max must be >= 3");
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");

  MuLimitReport r;
  r.e = e;
  r.k = k;
  r.d = d;
  r.z = z;
  r.n_max = n_max;
  r.tolerance = tol;

  // μ_{n+1} = M μ_n on the first column of the matrix power.
  const IntMatrix m = mu_base_matrix(e, d, z);
  std::vector<BigInt> mu(e);
  mu[0] = 1;
  for (unsigned long n = 0; n <= n_max; ++n) {
    if (n > 0) {
      std::vector<BigInt> next(e);
      for (unsigned i = 0; i < e; ++i) {
        for (unsigned j = 0; j < e; ++j) next[i] += m[i][j] * mu[j];
      }
      mu = std::move(next);
    }
    if (mu[e - 1] == 0) {
      r.ratios.emplace_back(std::nullopt);
      r.zero_denominators.push_back(n);
    } else {
      r.ratios.emplace_back(Rational(mu[k], mu[e - 1]));
    }
  }

  // Enough bits that the target enclosure is much narrower than the tolerance.
  const unsigned long tol_bits = mpz_sizeinbase(tol.inverse().floor().get_mpz_t(), 2);
  r.target = nth_root_enclosure(ipow(d, e - k - 1), e, tol_bits + 64);
  if (const auto& last = r.ratios.back()) {
    r.deviation = distance_bound(*last, r.target);
    r.within_tolerance = *r.deviation <= tol;
  }
  return r;
}

bool is_quadratic_residue(long d, unsigned long q) {
  const u64 v = reduce(d, q);
  if (v == 0) return true;
  return powmod(v, (q - 1) / 2, q) == 1;
}

RedeiPermutation redei_permutes(unsigned long q, long d, unsigned long n) {
  if (q < 3 || q % 2 == 0 || mpz_probab_prime_p(BigInt(q).get_mpz_t(), 30) == 0) {
    throw DomainError("q=" + std::to_string(q) + " is not an odd prime");
  }
  if (q >= (1UL << 32)) throw DomainError("q=" + std::to_string(q) + " exceeds 2^32");
  if (n < 1) throw DomainError("Redei functions need n >= 1");
  if (is_quadratic_residue(d, q)) {
    throw DomainError("d=" + std::to_string(d) + " is a quadratic residue mod " + std::to_string(q));
  }
  const u64 dq = reduce(d, q);
  RedeiPermutation out;
  out.gcd = std::gcd(n, q + 1);

  // (z + w√d)^n in F_q[√d]; index q stands for the point at infinity, which is
  // fixed since N has leading term z^n and D has degree below n in z.
  std::vector<bool> hit(q + 1, false);
  hit[q] = true;
  bool injective = true;
  for (u64 z = 0; z < q; ++z) {
    u64 rn = 1, rd = 0;        // running power
    u64 bn = z, bd = 1;        // base z + √d
    for (unsigned long e = n; e > 0; e >>= 1) {
      if (e & 1) {
        const u64 nn = (mulmod(rn, bn, q) + mulmod(mulmod(rd, bd, q), dq, q)) % q;
        const u64 nd = (mulmod(rn, bd, q) + mulmod(rd, bn, q)) % q;
        rn = nn;
        rd = nd;
      }
      const u64 sn = (mulmod(bn, bn, q) + mulmod(mulmod(bd, bd, q), dq, q)) % q;
      const u64 sd = mulmod(2 % q, mulmod(bn, bd, q), q);
      bn = sn;
      bd = sd;
    }
    std::size_t image;
    if (rd == 0) {
      out.poles.push_back(static_cast<unsigned long>(z));
      image = q;
    } else {
      image = static_cast<std::size_t>(mulmod(rn, powmod(rd, q - 2, q), q));
    }
    if (hit[image]) injective = false;
    hit[image] = true;
  }
  out.permutes = injective;
  return out;
}

}  // namespace cubicfrac

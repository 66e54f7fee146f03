#include "cubicfrac/cubic.hpp"

#include <algorithm>

#include "cubicfrac/error.hpp"

namespace cubicfrac {
namespace {

BigInt icbrt_floor(const BigInt& v) {
  BigInt r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
  return r;
}

BigInt lshift(const BigInt& v, unsigned long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
  return r;
}

unsigned long bit_length(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

void require_same_field(const CubicNumber& x, const CubicNumber& y) {
  if (!(x.radicand() == y.radicand())) {
    throw DomainError("mismatched radicands " + x.radicand().value().get_str() + " and " +
                      y.radicand().value().get_str());
  }
}

// x = (n0 + n1·δ + n2·δ²) / den with integer n_i and den > 0.
struct ScaledForm {
  BigInt n0, n1, n2, den;
};

ScaledForm scaled_form(const CubicNumber& x) {
  ScaledForm f;
  f.den = 1;
  for (const auto& c : x.coords()) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c.raw().get_den_mpz_t());
  auto scale = [&](const Rational& c) { return BigInt(c.num() * (f.den / c.den())); };
  f.n0 = scale(x.coord(0));
  f.n1 = scale(x.coord(1));
  f.n2 = scale(x.coord(2));
  return f;
}

// Integers lo, hi with lo < N·4^k < hi where N = n0 + n1·δ + n2·δ² and
// r < δ·2^k < r + 1. Strict because δ is irrational.
void numerator_bounds(const ScaledForm& f, const DeltaRefiner& ref, BigInt& lo, BigInt& hi) {
  const unsigned long k = ref.bits();
  const BigInt& r = ref.scaled_floor();
  const BigInt r1 = r + 1;
  const BigInt base = lshift(f.n0, 2 * k);
  const BigInt t1a = lshift(f.n1 * r, k);
  const BigInt t1b = lshift(f.n1 * r1, k);
  const BigInt t2a = f.n2 * r * r;
  const BigInt t2b = f.n2 * r1 * r1;
  lo = base + (f.n1 >= 0 ? t1a : t1b) + (f.n2 >= 0 ? t2a : t2b);
  hi = base + (f.n1 >= 0 ? t1b : t1a) + (f.n2 >= 0 ? t2b : t2a);
}

unsigned long initial_bits(const ScaledForm& f) {
  const unsigned long num_bits = std::max(bit_length(abs(f.n1)), bit_length(abs(f.n2)));
  const unsigned long den_bits = bit_length(f.den);
  return (num_bits > den_bits ? num_bits - den_bits : 0) + 48;
}

unsigned long next_bits(unsigned long bits) { return bits + bits / 2 + 32; }

}  // namespace

bool is_perfect_power(const BigInt& v, unsigned long e) {
  if (v < 0) return false;
  BigInt r;
  return mpz_root(r.get_mpz_t(), v.get_mpz_t(), e) != 0;
}

Radicand::Radicand(const BigInt& d) : d_(d) {
  if (d < 2) throw DomainError("d=" + d.get_str() + " must be an integer >= 2");
  if (is_perfect_power(d, 3)) throw DomainError("d=" + d.get_str() + " is a perfect cube");
}

Enclosure delta_enclosure(const BigInt& d, const Rational& width_bound) {
  const Radicand checked(d);
  if (width_bound.sign() <= 0) throw DomainError("width bound must be positive");
  const Rational target(checked.value());
  Enclosure e{Rational(1), target};
  while (e.width() > width_bound) {
    const Rational mid = (e.lo + e.hi) / Rational(2);
    if (mid * mid * mid < target) {
      e.lo = mid;
    } else {
      e.hi = mid;
    }
  }
  return e;
}

Enclosure nth_root_enclosure(const BigInt& m, unsigned long e, unsigned long bits) {
  if (m < 0 || e == 0) throw DomainError("root enclosure needs m >= 0 and e >= 1");
  BigInt r;
  const bool exact = mpz_root(r.get_mpz_t(), lshift(m, e * bits).get_mpz_t(), e) != 0;
  const BigInt scale = lshift(BigInt(1), bits);
  Rational lo(r, scale);
  return exact ? Enclosure{lo, lo} : Enclosure{lo, Rational(BigInt(r + 1), scale)};
}

DeltaRefiner::DeltaRefiner(const Radicand& d) : d_(d), scaled_(icbrt_floor(d.value())) {}

void DeltaRefiner::refine_to(unsigned long bits) {
  if (bits <= bits_) return;
  bits_ = bits;
  scaled_ = icbrt_floor(lshift(d_.value(), 3 * bits));
}

Enclosure DeltaRefiner::enclosure() const {
  const BigInt scale = lshift(BigInt(1), bits_);
  return {Rational(scaled_, scale), Rational(BigInt(scaled_ + 1), scale)};
}

Rational CubicNumber::norm() const {
  const Rational d(d_.value());
  const auto& [a0, a1, a2] = a_;
  return a0 * a0 * a0 + d * a1 * a1 * a1 + d * d * a2 * a2 * a2 - Rational(3) * d * a0 * a1 * a2;
}

CubicNumber CubicNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(cbrt(" + d_.value().get_str() + "))");
  if (is_rational()) return {d_, a_[0].inverse()};
  const Rational d(d_.value());
  const auto& [a0, a1, a2] = a_;
  const Rational n = norm().inverse();
  return {d_, (a0 * a0 - d * a1 * a2) * n, (d * a2 * a2 - a0 * a1) * n, (a1 * a1 - a0 * a2) * n};
}

CubicNumber& CubicNumber::operator+=(const CubicNumber& o) {
  require_same_field(*this, o);
  for (int i = 0; i < 3; ++i) a_[i] += o.a_[i];
  return *this;
}

CubicNumber& CubicNumber::operator-=(const CubicNumber& o) {
  require_same_field(*this, o);
  for (int i = 0; i < 3; ++i) a_[i] -= o.a_[i];
  return *this;
}

CubicNumber operator*(const CubicNumber& x, const CubicNumber& y) {
  require_same_field(x, y);
  const Rational d(x.d_.value());
  const auto& [a0, a1, a2] = x.a_;
  const auto& [b0, b1, b2] = y.a_;
  return {x.d_, a0 * b0 + d * (a1 * b2 + a2 * b1), a0 * b1 + a1 * b0 + d * a2 * b2,
          a0 * b2 + a1 * b1 + a2 * b0};
}

CubicNumber operator*(const CubicNumber& x, const Rational& s) {
  return {x.d_, x.a_[0] * s, x.a_[1] * s, x.a_[2] * s};
}

double CubicNumber::to_double() const {
  if (is_rational()) return a_[0].to_double();
  DeltaRefiner ref(d_);
  ref.refine_to(initial_bits(scaled_form(*this)) + 64);
  const Enclosure e = value_enclosure(*this, ref);
  return ((e.lo + e.hi) / Rational(2)).to_double();
}

std::string CubicNumber::str() const {
  const std::string root = "cbrt(" + d_.value().get_str() + ")";
  const std::array<std::string, 3> basis{"", root, root + "^2"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const Rational& c = a_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (!out.empty()) {
      out += neg ? " - " : " + ";
    } else if (neg) {
      out += "-";
    }
    if (i == 0) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += basis[i];
    } else {
      out += mag.str() + "*" + basis[i];
    }
  }
  return out.empty() ? "0" : out;
}

CubicNumber cn_mul(const CubicNumber& x, const CubicNumber& y) { return x * y; }

CubicNumber cn_inv(const CubicNumber& x) { return x.inverse(); }

Enclosure value_enclosure(const CubicNumber& x, const DeltaRefiner& refiner) {
  if (x.is_rational()) return {x.coord(0), x.coord(0)};
  const ScaledForm f = scaled_form(x);
  BigInt lo, hi;
  numerator_bounds(f, refiner, lo, hi);
  const BigInt scale = lshift(f.den, 2 * refiner.bits());
  return {Rational(lo, scale), Rational(hi, scale)};
}

int cn_sign(const CubicNumber& x, DeltaRefiner& refiner) {
  if (x.is_rational()) return x.coord(0).sign();
  const ScaledForm f = scaled_form(x);
  refiner.refine_to(initial_bits(f));
  for (;;) {
    BigInt lo, hi;
    numerator_bounds(f, refiner, lo, hi);
    if (lo >= 0) return 1;
    if (hi <= 0) return -1;
    refiner.refine_to(next_bits(refiner.bits()));
  }
}

int cn_sign(const CubicNumber& x) {
  DeltaRefiner ref(x.radicand());
  return cn_sign(x, ref);
}

std::strong_ordering cn_compare(const CubicNumber& x, const CubicNumber& y) {
  const int s = cn_sign(x - y);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering cn_compare(const CubicNumber& x, const Rational& y) {
  return cn_compare(x, CubicNumber(x.radicand(), y));
}

BigInt cn_floor(const CubicNumber& x, DeltaRefiner& refiner) {
  if (x.is_rational()) return x.coord(0).floor();
  const ScaledForm f = scaled_form(x);
  refiner.refine_to(initial_bits(f));
  for (;;) {
    BigInt lo, hi;
    numerator_bounds(f, refiner, lo, hi);
    const BigInt scale = lshift(f.den, 2 * refiner.bits());
    // lo/scale < x < hi/scale, so ⌊lo/scale⌋ <= ⌊x⌋ <= ⌈hi/scale⌉ − 1.
    BigInt below, above;
    mpz_fdiv_q(below.get_mpz_t(), lo.get_mpz_t(), scale.get_mpz_t());
    mpz_cdiv_q(above.get_mpz_t(), hi.get_mpz_t(), scale.get_mpz_t());
    above -= 1;
    if (below == above) return below;
    refiner.refine_to(next_bits(refiner.bits()));
  }
}

BigInt cn_floor(const CubicNumber& x) {
  DeltaRefiner ref(x.radicand());
  return cn_floor(x, ref);
}

Enclosure enclose(const CubicNumber& x, const Rational& max_width) {
  if (max_width.sign() <= 0) throw DomainError("width bound must be positive");
  if (x.is_rational()) return {x.coord(0), x.coord(0)};
  DeltaRefiner ref(x.radicand());
  ref.refine_to(initial_bits(scaled_form(x)));
  for (;;) {
    Enclosure e = value_enclosure(x, ref);
    if (e.width() <= max_width) return e;
    ref.refine_to(next_bits(ref.bits()));
  }
}

Rational distance_bound(const Rational& v, const Enclosure& e) {
  const Rational below = (v - e.lo).abs();
  const Rational above = (v - e.hi).abs();
  return below > above ? below : above;
}

std::size_t hash_cubic(const CubicNumber& x) noexcept {
  std::size_t h = hash_bigint(x.radicand().value());
  for (const auto& c : x.coords()) h = hash_combine(h, hash_rational(c));
  return h;
}

}  // namespace cubicfrac

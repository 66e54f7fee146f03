#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

#include "cubicfrac/rational.hpp"

namespace cubicfrac {

// A radicand d >= 2 that is not a perfect cube, so that 1, δ, δ² with
// δ = d^(1/3) form a basis of Q(δ).
class Radicand {
 public:
  explicit Radicand(const BigInt& d);  // throws DomainError
  explicit Radicand(long d) : Radicand(BigInt(d)) {}

  const BigInt& value() const { return d_; }
  friend bool operator==(const Radicand& a, const Radicand& b) { return a.d_ == b.d_; }

 private:
  BigInt d_;
};

bool is_perfect_power(const BigInt& v, unsigned long e);

// Closed rational interval [lo, hi].
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Enclosure& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

// Reference bisection on x³ − d starting from [1, d]; stops as soon as the
// width is at most width_bound. The endpoints satisfy lo³ < d < hi³.
Enclosure delta_enclosure(const BigInt& d, const Rational& width_bound);

// Dyadic enclosure [r/2^bits, (r+1)/2^bits] of m^(1/e) with r = ⌊m^(1/e)·2^bits⌋.
// Degenerates to a point when m is a perfect e-th power.
Enclosure nth_root_enclosure(const BigInt& m, unsigned long e, unsigned long bits);

// Incrementally refined dyadic enclosure of δ. Successive refinements are
// nested. One instance is meant to live for the duration of a computation
// (an expansion, a comparison) and is not shared between threads.
class DeltaRefiner {
 public:
  explicit DeltaRefiner(const Radicand& d);

  // Ensures the enclosure has width at most 2^-bits.
  void refine_to(unsigned long bits);

  const Radicand& radicand() const { return d_; }
  unsigned long bits() const { return bits_; }
  // r with r < δ·2^bits < r + 1.
  const BigInt& scaled_floor() const { return scaled_; }
  Enclosure enclosure() const;

 private:
  Radicand d_;
  unsigned long bits_ = 0;
  BigInt scaled_;
};

// a0 + a1·δ + a2·δ² in Q(δ), coordinates in lowest terms.
class CubicNumber {
 public:
  CubicNumber(const Radicand& d, Rational a0, Rational a1 = 0, Rational a2 = 0)
      : d_(d), a_{std::move(a0), std::move(a1), std::move(a2)} {}

  static CubicNumber cbrt(const Radicand& d) { return {d, 0, 1, 0}; }
  static CubicNumber cbrt_squared(const Radicand& d) { return {d, 0, 0, 1}; }

  const Radicand& radicand() const { return d_; }
  const Rational& coord(int i) const { return a_[i]; }
  const std::array<Rational, 3>& coords() const { return a_; }

  bool is_rational() const { return a_[1].is_zero() && a_[2].is_zero(); }
  bool is_zero() const { return is_rational() && a_[0].is_zero(); }

  // Field norm: determinant of multiplication-by-this in the basis (1, δ, δ²).
  Rational norm() const;
  CubicNumber inverse() const;  // throws DomainError on zero

  CubicNumber& operator+=(const CubicNumber& o);
  CubicNumber& operator-=(const CubicNumber& o);
  CubicNumber& operator+=(const Rational& o) { a_[0] += o; return *this; }
  CubicNumber& operator-=(const Rational& o) { a_[0] -= o; return *this; }

  friend CubicNumber operator+(CubicNumber a, const CubicNumber& b) { return a += b; }
  friend CubicNumber operator-(CubicNumber a, const CubicNumber& b) { return a -= b; }
  friend CubicNumber operator+(CubicNumber a, const Rational& b) { return a += b; }
  friend CubicNumber operator-(CubicNumber a, const Rational& b) { return a -= b; }
  friend CubicNumber operator-(const CubicNumber& a) { return {a.d_, -a.a_[0], -a.a_[1], -a.a_[2]}; }
  friend CubicNumber operator*(const CubicNumber& a, const CubicNumber& b);
  friend CubicNumber operator*(const CubicNumber& a, const Rational& b);
  friend CubicNumber operator/(const CubicNumber& a, const CubicNumber& b) { return a * b.inverse(); }

  // Equal iff same radicand and identical coordinates.
  friend bool operator==(const CubicNumber& a, const CubicNumber& b) {
    return a.d_ == b.d_ && a.a_ == b.a_;
  }

  double to_double() const;
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CubicNumber& x) { return os << x.str(); }

 private:
  Radicand d_;
  std::array<Rational, 3> a_;
};

CubicNumber cn_mul(const CubicNumber& x, const CubicNumber& y);
CubicNumber cn_inv(const CubicNumber& x);

int cn_sign(const CubicNumber& x, DeltaRefiner& refiner);
int cn_sign(const CubicNumber& x);

std::strong_ordering cn_compare(const CubicNumber& x, const CubicNumber& y);
std::strong_ordering cn_compare(const CubicNumber& x, const Rational& y);

BigInt cn_floor(const CubicNumber& x, DeltaRefiner& refiner);
BigInt cn_floor(const CubicNumber& x);

// Rational interval guaranteed to contain x, using the refiner's current precision.
Enclosure value_enclosure(const CubicNumber& x, const DeltaRefiner& refiner);

// Enclosure of x of width at most max_width.
Enclosure enclose(const CubicNumber& x, const Rational& max_width);

// Upper bound on |v - t| over all t in e.
Rational distance_bound(const Rational& v, const Enclosure& e);

std::size_t hash_cubic(const CubicNumber& x) noexcept;

}  // namespace cubicfrac

template <>
struct std::hash<cubicfrac::CubicNumber> {
  std::size_t operator()(const cubicfrac::CubicNumber& x) const noexcept {
    return cubicfrac::hash_cubic(x);
  }
};

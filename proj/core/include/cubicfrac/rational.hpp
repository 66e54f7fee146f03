#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace cubicfrac {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::size_t hash_bigint(const BigInt& v) noexcept;

// Arbitrary precision signed rational, always in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  // Throws DomainError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "p/q", with optional sign on p.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  Rational abs() const;
  Rational inverse() const;  // throws DomainError on zero
  Rational pow(unsigned long exponent) const;

  double to_double() const { return value_.get_d(); }
  std::string str() const;  // "p" or "p/q"

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

std::size_t hash_rational(const Rational& r) noexcept;

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace cubicfrac

template <>
struct std::hash<cubicfrac::Rational> {
  std::size_t operator()(const cubicfrac::Rational& r) const noexcept {
    return cubicfrac::hash_rational(r);
  }
};

#pragma once

#include "cubicfrac/cubic.hpp"
#include "cubicfrac/rational.hpp"
#include "oracles.hpp"

namespace testing_support {

using cubicfrac::CubicNumber;
using cubicfrac::Radicand;
using cubicfrac::Rational;

inline Rational R(const oracle::Q& v) { return Rational(v.get_num(), v.get_den()); }
inline Rational R(long n, long d = 1) { return Rational(cubicfrac::BigInt(n), cubicfrac::BigInt(d)); }
inline oracle::Q Q(const Rational& r) { return r.raw(); }

inline oracle::Coords coords(const CubicNumber& x) {
  return {Q(x.coord(0)), Q(x.coord(1)), Q(x.coord(2))};
}

inline CubicNumber cubic(long d, const oracle::Coords& c) {
  return CubicNumber(Radicand(d), R(c[0]), R(c[1]), R(c[2]));
}

inline CubicNumber random_cubic(oracle::Random& rng, long d, long num_bound = 20, long den_bound = 9) {
  return CubicNumber(Radicand(d), R(rng.rational(num_bound, den_bound)),
                     R(rng.rational(num_bound, den_bound)), R(rng.rational(num_bound, den_bound)));
}

}  // namespace testing_support

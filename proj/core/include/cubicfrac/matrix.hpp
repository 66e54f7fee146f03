#pragma once

#include <array>
#include <string>

#include "cubicfrac/rational.hpp"

namespace cubicfrac {

// Dense 3x3 matrix over the rationals, row major.
struct Matrix3 {
  std::array<std::array<Rational, 3>, 3> m{};

  static Matrix3 identity();
  static Matrix3 from_rows(const std::array<Rational, 9>& entries);

  Rational& operator()(int r, int c) { return m[r][c]; }
  const Rational& operator()(int r, int c) const { return m[r][c]; }

  Rational determinant() const;
  Rational trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
  friend bool operator==(const Matrix3& a, const Matrix3& b) = default;
};

// The single-step matrix [[a,1,0],[b,0,1],[1,0,0]] of a bifurcating
// continued fraction.
Matrix3 step_matrix(const Rational& a, const Rational& b);

}  // namespace cubicfrac

#include "cubicfrac/matrix.hpp"

namespace cubicfrac {

Matrix3 Matrix3::identity() {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Matrix3 Matrix3::from_rows(const std::array<Rational, 9>& entries) {
  Matrix3 r;
  for (int i = 0; i < 9; ++i) r.m[i / 3][i % 3] = entries[i];
  return r;
}

Rational Matrix3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational s;
      for (int k = 0; k < 3; ++k) {
        if (!a.m[i][k].is_zero() && !b.m[k][j].is_zero()) s += a.m[i][k] * b.m[k][j];
      }
      r.m[i][j] = s;
    }
  }
  return r;
}

Matrix3 step_matrix(const Rational& a, const Rational& b) {
  Matrix3 r;
  r.m[0] = {a, 1, 0};
  r.m[1] = {b, 0, 1};
  r.m[2] = {1, 0, 0};
  return r;
}

}  // namespace cubicfrac

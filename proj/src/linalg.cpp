#include "nullshock/linalg.hpp"

#include <cmath>

#include "nullshock/errors.hpp"

namespace nullshock {

Mat4 mat4_zero() {
  Mat4 m{};
  return m;
}

Mat4 mat4_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const double aik = a[i][k];
      for (int j = 0; j < 4; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

Vec4 mat4_apply(const Mat4& a, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a[i][j] * v[j];
  return r;
}

namespace {

// LU decomposition with partial pivoting into a working copy.
// Returns the permutation sign, or 0.0 if a pivot vanished exactly.
double lu_decompose(Mat4& m, std::array<int, 4>& piv) {
  double sign = 1.0;
  for (int i = 0; i < 4; ++i) piv[i] = i;
  for (int col = 0; col < 4; ++col) {
    int best = col;
    double mag = std::fabs(m[col][col]);
    for (int row = col + 1; row < 4; ++row) {
      const double v = std::fabs(m[row][col]);
      if (v > mag) {
        mag = v;
        best = row;
      }
    }
    if (best != col) {
      std::swap(m[best], m[col]);
      std::swap(piv[best], piv[col]);
      sign = -sign;
    }
    if (m[col][col] == 0.0) return 0.0;
    for (int row = col + 1; row < 4; ++row) {
      const double f = m[row][col] / m[col][col];
      m[row][col] = f;
      for (int j = col + 1; j < 4; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return sign;
}

}  // namespace

double mat4_det(const Mat4& a) {
  Mat4 m = a;
  std::array<int, 4> piv;
  const double sign = lu_decompose(m, piv);
  if (sign == 0.0) return 0.0;
  double det = sign;
  for (int i = 0; i < 4; ++i) det *= m[i][i];
  return det;
}

Mat4 mat4_inverse(const Mat4& a) {
  Mat4 m = a;
  std::array<int, 4> piv;
  const double sign = lu_decompose(m, piv);
  if (sign == 0.0) throw BadJacobian("mat4_inverse: exactly singular matrix");
  Mat4 inv{};
  for (int rhs = 0; rhs < 4; ++rhs) {
    // Solve L U x = P e_rhs column by column.
    Vec4 y{};
    for (int i = 0; i < 4; ++i) {
      double v = (piv[i] == rhs) ? 1.0 : 0.0;
      for (int j = 0; j < i; ++j) v -= m[i][j] * y[j];
      y[i] = v;
    }
    for (int i = 3; i >= 0; --i) {
      double v = y[i];
      for (int j = i + 1; j < 4; ++j) v -= m[i][j] * inv[j][rhs];
      inv[i][rhs] = v / m[i][i];
    }
  }
  return inv;
}

double mat4_max_abs(const Mat4& a) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::fabs(a[i][j]));
  return r;
}

double mat4_max_abs_diff(const Mat4& a, const Mat4& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::fabs(a[i][j] - b[i][j]));
  return r;
}

double vec4_max_abs(const Vec4& v) {
  double r = 0.0;
  for (double c : v) r = std::max(r, std::fabs(c));
  return r;
}

double vec4_dot(const Vec4& a, const Vec4& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r += a[i] * b[i];
  return r;
}

double metric_dot(const Mat4& g, const Vec4& u, const Vec4& v) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r += g[i][j] * u[i] * v[j];
  return r;
}

double mat4_cond_inf(const Mat4& a) {
  auto norm_inf = [](const Mat4& m) {
    double best = 0.0;
    for (int i = 0; i < 4; ++i) {
      double row = 0.0;
      for (int j = 0; j < 4; ++j) row += std::fabs(m[i][j]);
      best = std::max(best, row);
    }
    return best;
  };
  return norm_inf(a) * norm_inf(mat4_inverse(a));
}

bool all_finite(const Vec4& v) {
  for (double c : v)
    if (!std::isfinite(c)) return false;
  return true;
}

bool all_finite(const Mat4& m) {
  for (const auto& row : m)
    for (double c : row)
      if (!std::isfinite(c)) return false;
  return true;
}

}  // namespace nullshock

#pragma once

#include <array>
#include <cstddef>

namespace nullshock {

// Fixed-size containers for spacetime-indexed data. Components are plain
// doubles indexed 0..3; storage is row-major in index order.
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Rank-3 block of 4^3 components, e.g. Christoffel symbols G(s,a,b).
struct Ten3 {
  std::array<double, 64> a{};
  double& operator()(int i, int j, int k) { return a[(i * 4 + j) * 4 + k]; }
  double operator()(int i, int j, int k) const { return a[(i * 4 + j) * 4 + k]; }
};

// Rank-4 block of 4^4 components, e.g. Riemann R(m,a,n,b) or metric d2.
struct Ten4 {
  std::array<double, 256> a{};
  double& operator()(int i, int j, int k, int l) {
    return a[((i * 4 + j) * 4 + k) * 4 + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return a[((i * 4 + j) * 4 + k) * 4 + l];
  }
};

Mat4 mat4_zero();
Mat4 mat4_identity();
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Vec4 mat4_apply(const Mat4& a, const Vec4& v);
double mat4_det(const Mat4& a);
// Gauss-Jordan with partial pivoting; caller is responsible for checking
// the determinant against its own degeneracy floor first.
Mat4 mat4_inverse(const Mat4& a);

double mat4_max_abs(const Mat4& a);
double mat4_max_abs_diff(const Mat4& a, const Mat4& b);
double vec4_max_abs(const Vec4& v);
double vec4_dot(const Vec4& a, const Vec4& b);  // plain Euclidean sum
// Metric contraction g_{ab} u^a v^b.
double metric_dot(const Mat4& g, const Vec4& u, const Vec4& v);

// Infinity-norm condition estimate |A| * |A^-1|.
double mat4_cond_inf(const Mat4& a);

bool all_finite(const Vec4& v);
bool all_finite(const Mat4& m);

}  // namespace nullshock

#include "nullshock/fd.hpp"

#include <cmath>
#include <limits>

#include "nullshock/errors.hpp"

namespace nullshock::fd {

double central_step(double scale) {
  return std::cbrt(std::numeric_limits<double>::epsilon()) * scale;
}

double central_diff(const std::function<double(double)>& f, double x,
                    double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double richardson_diff(const std::function<double(double)>& f, double x,
                       double h) {
  const double d_h = central_diff(f, x, h);
  const double d_h2 = central_diff(f, x, h / 2.0);
  return (4.0 * d_h2 - d_h) / 3.0;
}

namespace {

double central_diff2(const std::function<double(double)>& f, double x,
                     double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

double cross_diff(const std::function<double(double, double)>& f, double x,
                  double y, double h) {
  return (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) +
          f(x - h, y - h)) /
         (4.0 * h * h);
}

}  // namespace

double richardson_diff2(const std::function<double(double)>& f, double x,
                        double h) {
  const double d_h = central_diff2(f, x, h);
  const double d_h2 = central_diff2(f, x, h / 2.0);
  return (4.0 * d_h2 - d_h) / 3.0;
}

double richardson_cross(const std::function<double(double, double)>& f,
                        double x, double y, double h) {
  const double d_h = cross_diff(f, x, y, h);
  const double d_h2 = cross_diff(f, x, y, h / 2.0);
  return (4.0 * d_h2 - d_h) / 3.0;
}

std::vector<double> stencil_weights(const std::vector<double>& offsets,
                                    int order) {
  const int n = static_cast<int>(offsets.size());
  if (order < 0 || order >= n)
    throw Error("stencil_weights: need more nodes than derivative order");
  // Vandermonde system: sum_i w_i off_i^k = k! [k == order], k = 0..n-1.
  std::vector<double> a(static_cast<size_t>(n) * n);
  std::vector<double> rhs(n, 0.0);
  double fact = 1.0;
  for (int k = 2; k <= order; ++k) fact *= k;
  rhs[order] = fact;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      a[static_cast<size_t>(k) * n + i] = std::pow(offsets[i], k);
  // Gaussian elimination with partial pivoting.
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  for (int col = 0; col < n; ++col) {
    int best = col;
    double mag = std::fabs(a[static_cast<size_t>(rows[col]) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double v = std::fabs(a[static_cast<size_t>(rows[r]) * n + col]);
      if (v > mag) {
        mag = v;
        best = r;
      }
    }
    std::swap(rows[col], rows[best]);
    if (mag == 0.0) throw Error("stencil_weights: singular node system");
    const double piv = a[static_cast<size_t>(rows[col]) * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[static_cast<size_t>(rows[r]) * n + col] / piv;
      for (int j = col; j < n; ++j)
        a[static_cast<size_t>(rows[r]) * n + j] -=
            f * a[static_cast<size_t>(rows[col]) * n + j];
      rhs[rows[r]] -= f * rhs[rows[col]];
    }
  }
  std::vector<double> w(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double v = rhs[rows[i]];
    for (int j = i + 1; j < n; ++j)
      v -= a[static_cast<size_t>(rows[i]) * n + j] * w[j];
    w[i] = v / a[static_cast<size_t>(rows[i]) * n + i];
  }
  return w;
}

DerivativeCheck validate_metric_derivatives(const MetricSpec& m,
                                            const std::vector<Vec4>& points,
                                            double scale) {
  DerivativeCheck out;
  const double h1 = central_step(scale);
  // Second differences lose more digits; use a larger step (eps^(1/4)).
  const double h2 =
      std::sqrt(std::sqrt(std::numeric_limits<double>::epsilon())) * scale;
  for (const Vec4& x : points) {
    const Ten3 g1 = m.d1(x);
    const Ten4 g2 = m.d2(x);
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          auto along_c = [&](double s) {
            Vec4 y = x;
            y[c] += s;
            return m.value(y)[a][b];
          };
          const double fd1 = richardson_diff(along_c, 0.0, h1);
          const double rel1 = std::fabs(fd1 - g1(a, b, c)) /
                              std::max(1.0, std::fabs(g1(a, b, c)));
          out.max_rel_d1 = std::max(out.max_rel_d1, rel1);

          const double fdcc = richardson_diff2(along_c, 0.0, h2);
          const double relcc = std::fabs(fdcc - g2(a, b, c, c)) /
                               std::max(1.0, std::fabs(g2(a, b, c, c)));
          out.max_rel_d2 = std::max(out.max_rel_d2, relcc);
          for (int d = c + 1; d < 4; ++d) {
            auto plane = [&](double s, double u) {
              Vec4 y = x;
              y[c] += s;
              y[d] += u;
              return m.value(y)[a][b];
            };
            const double fdcd = richardson_cross(plane, 0.0, 0.0, h2);
            const double relcd = std::fabs(fdcd - g2(a, b, c, d)) /
                                 std::max(1.0, std::fabs(g2(a, b, c, d)));
            out.max_rel_d2 = std::max(out.max_rel_d2, relcd);
          }
        }
      }
  }
  return out;
}

}  // namespace nullshock::fd

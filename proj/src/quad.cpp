#include "nullshock/quad.hpp"

#include <cmath>
#include <vector>

#include "nullshock/errors.hpp"

namespace nullshock::quad {

namespace {

struct Rule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Legendre polynomial value and derivative by recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

Rule make_rule(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-style initial guess, then Newton.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const auto [p, dp] = legendre(n, x);
    (void)p;
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

double apply(const Rule& r, const std::function<double(double)>& f, double a,
             double b) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < r.nodes.size(); ++i)
    s += r.weights[i] * f(c + hw * r.nodes[i]);
  return s * hw;
}

double adaptive(const Rule& lo, const Rule& hi,
                const std::function<double(double)>& f, double a, double b,
                double tol, int depth) {
  const double coarse = apply(lo, f, a, b);
  const double fine = apply(hi, f, a, b);
  if (std::fabs(fine - coarse) <= tol || depth >= 48) return fine;
  const double c = 0.5 * (a + b);
  return adaptive(lo, hi, f, a, c, tol / 2.0, depth + 1) +
         adaptive(lo, hi, f, c, b, tol / 2.0, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(abs_tol > 0.0)) throw Error("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  static const Rule lo = make_rule(7);
  static const Rule hi = make_rule(15);
  return adaptive(lo, hi, f, a, b, abs_tol, 0);
}

}  // namespace nullshock::quad

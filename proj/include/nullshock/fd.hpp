#pragma once

#include <functional>
#include <vector>

#include "nullshock/linalg.hpp"
#include "nullshock/metric.hpp"

namespace nullshock::fd {

// Step size for central differences: cbrt(machine epsilon) * scale.
double central_step(double scale = 1.0);

// Central first derivative of a scalar function of one variable.
double central_diff(const std::function<double(double)>& f, double x, double h);

// Richardson-extrapolated central first derivative: combines h and h/2
// evaluations, killing the leading O(h^2) error term.
double richardson_diff(const std::function<double(double)>& f, double x,
                       double h);

// Central second derivative with Richardson extrapolation.
double richardson_diff2(const std::function<double(double)>& f, double x,
                        double h);

// Mixed second derivative d^2 f / dx dy via the four-corner cross stencil,
// Richardson extrapolated.
double richardson_cross(const std::function<double(double, double)>& f,
                        double x, double y, double h);

// Weights w_i so that sum_i w_i f(offsets_i) approximates the derivative of
// the given order at 0, exact on polynomials of degree < offsets.size().
// Solves the small Vandermonde system directly.
std::vector<double> stencil_weights(const std::vector<double>& offsets,
                                    int order);

// Largest relative disagreement between the analytic d1/d2 of a metric and
// Richardson-extrapolated finite differences of value()/d1() over the given
// points. Relative to max(1, |analytic|) componentwise.
struct DerivativeCheck {
  double max_rel_d1 = 0.0;
  double max_rel_d2 = 0.0;
};
DerivativeCheck validate_metric_derivatives(const MetricSpec& m,
                                            const std::vector<Vec4>& points,
                                            double scale = 1.0);

}  // namespace nullshock::fd

#pragma once

#include <functional>

namespace nullshock::quad {

// Adaptive Gauss-Legendre quadrature: each interval is scored with an
// embedded low/high order pair and bisected until the local error estimate
// is below the tolerance. Nodes are generated at runtime by Newton iteration
// on the Legendre polynomials, so accuracy is machine-level.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}  // namespace nullshock::quad

#pragma once

#include <stdexcept>
#include <string>

namespace nullshock {

// Base class for every failure the library raises on purpose. Callers that
// want a blanket handler catch this; the CLI maps subtypes onto exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Metric determinant below the degeneracy floor; inversion refused.
class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

// Point outside the coordinate domain of a chart (r<=0, 1-kr^2<=0, ...).
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// A curve (geodesic or coordinate flow) left the chart it was integrated in.
class ChartExit : public Error {
 public:
  using Error::Error;
};

// MGS patch request too large: the geodesic fan stops being invertible.
class PatchTooLarge : public Error {
 public:
  using Error::Error;
};

// Fluid four-velocity does not satisfy g(u,u) = -1.
class UnnormalizedVelocity : public Error {
 public:
  using Error::Error;
};

// Jacobian pair fails the inverse check, or a chart jacobian is singular.
class BadJacobian : public Error {
 public:
  using Error::Error;
};

// Level function has (numerically) vanishing gradient; no normal direction.
class ZeroGradient : public Error {
 public:
  using Error::Error;
};

// No valid transverse vector: seed is tangent or <seed,n> = 0.
class NoTransverse : public Error {
 public:
  using Error::Error;
};

// Closed-form evaluation hit the r_bar <= 0 singularity of the solution.
class ShockAtOrigin : public Error {
 public:
  using Error::Error;
};

// Wrong monotonicity branch requested (contracting branch, or a density
// outside the range attained on the chosen branch).
class BranchError : public Error {
 public:
  using Error::Error;
};

// Matching surface is characteristic for the coordinate map (t,r)->(t,r_bar).
class CharacteristicSurface : public Error {
 public:
  using Error::Error;
};

// Equation-of-state ratio outside the admissible interval.
class BadSigma : public Error {
 public:
  using Error::Error;
};

// Root bracket does not contain a sign change.
class NoRoot : public Error {
 public:
  using Error::Error;
};

// Spherical junction analysis requires N(c) != 0 (c = areal metric entry).
class AreaDerivativeZero : public Error {
 public:
  using Error::Error;
};

// Malformed run configuration (CLI / config file level).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nullshock

#pragma once

#include <functional>

#include "nullshock/metric.hpp"

namespace nullshock::exact {

// Map between the equation-of-state ratios on the two sides of the shock,
// sigma = p/rho (cosmological side), sigma_bar = p_bar/rho_bar (static side).
// Forward: sigma_bar(sigma) = sqrt(9 sigma^2 - 18 sigma + 25)/2
//                             + (3/2) sigma - 5/2, fixing 0->0 and 1->1.
// Inverse: sigma(sigma_bar) = sigma_bar (sigma_bar + 5) / (3 (sigma_bar + 1)).
// Both throw BadSigma outside [0, 1].
double eos_sigma_bar_of_sigma(double sigma);
double eos_sigma_of_sigma_bar(double sigma_bar);

// Density coefficient of the static solution rho_bar = gamma / rbar^2:
// gamma = sigma_bar / (2 pi G (1 + 6 sigma_bar + sigma_bar^2)).
double gamma_of_sigma_bar(double sigma_bar, double G);

// ---------------------------------------------------------------------------
// Cosmological (homogeneous, expanding) side.
//
// Metric ds^2 = -dt^2 + R^2/(1-kr^2) dr^2 + r^2 R^2 dOmega^2 with p = sigma
// rho, k = 0 closed forms anchored on a comoving sphere of areal radius
// rbar(t) = sign*sqrt(18 pi G gamma)(1+sigma)(t - t0) + rbar0:
//   rho(t) = 3 gamma / rbar(t)^2
//   R(t)   = R0 (rbar(t)/rbar0)^(2/(3(1+sigma)))
//   r(t)   = rbar(t)/R(t) = (rbar0/R0)(rbar(t)/rbar0)^((1+3sigma)/(3+3sigma))
// gamma is a free density scale; matched configurations tie it to the static
// side's coefficient.
// ---------------------------------------------------------------------------
struct FrwParameters {
  double sigma = 0.0;
  double k = 0.0;
  double R0 = 1.0;
  double t0 = 0.0;
  double rbar0 = 1.0;
  int sign = +1;
  double G = 1.0;
  double gamma = 0.0;
};

// Validated constructor with an explicit density scale.
FrwParameters frw_parameters(double sigma, double gamma, double R0 = 1.0,
                             double t0 = 0.0, double rbar0 = 1.0,
                             double G = 1.0, int sign = +1, double k = 0.0);

// Density scale derived from the equation-of-state map: gamma =
// gamma_of_sigma_bar(eos_sigma_bar_of_sigma(sigma), G).
FrwParameters frw_from_sigma(double sigma, double R0 = 1.0, double t0 = 0.0,
                             double rbar0 = 1.0, double G = 1.0,
                             int sign = +1);

double frw_rbar(const FrwParameters& p, double t);
double frw_rbar_dot(const FrwParameters& p);  // constant along the branch
double frw_density(const FrwParameters& p, double t);
double frw_pressure(const FrwParameters& p, double t);
double frw_scale(const FrwParameters& p, double t);
double frw_scale_dot(const FrwParameters& p, double t);
double frw_scale_ddot(const FrwParameters& p, double t);
double frw_r(const FrwParameters& p, double t);      // comoving radius rbar/R
double frw_r_dot(const FrwParameters& p, double t);
// Inverse of frw_density on the chosen monotone branch.
double frw_time_of_density(const FrwParameters& p, double rho);

MetricPtr frw_metric(const FrwParameters& p);

// ODE residuals along the closed forms, with time derivatives taken by
// Richardson-extrapolated finite differences (independent of the hand-coded
// derivative expressions). All residuals are relative.
double frw_ode1_residual(const FrwParameters& p, double t);
double frw_ode2_residual(const FrwParameters& p, double t);
// d log R + d rho / (3 (rho + p)) = 0 along the solution.
double frw_drr_residual(const FrwParameters& p, double t);

// Time as a function of density through the quadrature
//   t - t0 = -sign * int_{rho0}^{rho} dxi / ((xi + p(xi)) sqrt(24 pi G xi)),
// for an arbitrary pressure law. Oracle for frw_time_of_density.
double frw_time_of_density_quadrature(
    const FrwParameters& p, double rho,
    const std::function<double(double)>& pressure_of_rho, double abs_tol);

// ---------------------------------------------------------------------------
// Static (spherical, time-independent) side.
//
// Metric ds^2 = -B(rbar) dtbar^2 + A^{-1} drbar^2 + rbar^2 dOmega^2 with
// p_bar = sigma_bar rho_bar and rho_bar = gamma / rbar^2:
//   M(rbar) = 4 pi gamma rbar
//   A       = 1 - 8 pi G gamma            (constant)
//   B(rbar) = B0 (rbar/rbar0)^(4 sigma_bar/(1+sigma_bar))
// ---------------------------------------------------------------------------
struct TovParameters {
  double sigma_bar = 0.0;
  double gamma = 0.0;
  double A = 1.0;
  double B0 = 1.0;
  double rbar0 = 1.0;
  double G = 1.0;
};

TovParameters tov_solve(double sigma_bar, double B0 = 1.0, double rbar0 = 1.0,
                        double G = 1.0);

double tov_density(const TovParameters& p, double rbar);
double tov_pressure(const TovParameters& p, double rbar);
double tov_mass(const TovParameters& p, double rbar);
double tov_B(const TovParameters& p, double rbar);

MetricPtr tov_metric(const TovParameters& p);

// Hydrostatic balance residual (relative):
//   -rbar^2 p' = G M rho (1 + p/rho)(1 + 4 pi rbar^3 p / M)(1 - 2GM/rbar)^-1
// with p' by finite differences.
double tov_ove_residual(const TovParameters& p, double rbar);
// dM/drbar = 4 pi rbar^2 rho_bar, FD mass derivative.
double tov_mass_derivative_residual(const TovParameters& p, double rbar);
// B'/B = -2 p'/(p + rho), FD both derivatives.
double tov_bb_residual(const TovParameters& p, double rbar);

}  // namespace nullshock::exact

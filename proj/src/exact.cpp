#include "nullshock/exact.hpp"

#include <cmath>
#include <sstream>

#include "nullshock/errors.hpp"
#include "nullshock/fd.hpp"
#include "nullshock/quad.hpp"

namespace nullshock::exact {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << v << " outside [0, 1]";
    throw BadSigma(os.str());
  }
}

}  // namespace

double eos_sigma_bar_of_sigma(double sigma) {
  require_unit_interval(sigma, "sigma");
  return 0.5 * std::sqrt(9.0 * sigma * sigma - 18.0 * sigma + 25.0) +
         1.5 * sigma - 2.5;
}

double eos_sigma_of_sigma_bar(double sigma_bar) {
  require_unit_interval(sigma_bar, "sigma_bar");
  return sigma_bar * (sigma_bar + 5.0) / (3.0 * (sigma_bar + 1.0));
}

double gamma_of_sigma_bar(double sigma_bar, double G) {
  require_unit_interval(sigma_bar, "sigma_bar");
  if (!(G > 0.0)) throw ConfigError("G must be positive");
  return sigma_bar /
         (2.0 * kPi * G * (1.0 + 6.0 * sigma_bar + sigma_bar * sigma_bar));
}

// --------------------------------------------------------------------------
// Cosmological side
// --------------------------------------------------------------------------

namespace {

// Speed of the anchor sphere's areal radius, sqrt(18 pi G gamma)(1 + sigma).
double anchor_speed(const FrwParameters& p) {
  return std::sqrt(18.0 * kPi * p.G * p.gamma) * (1.0 + p.sigma);
}

double scale_exponent(const FrwParameters& p) {
  return 2.0 / (3.0 * (1.0 + p.sigma));
}

// rbar(t)/rbar0; positive inside the chart.
double anchor_ratio(const FrwParameters& p, double t) {
  return (p.sign * anchor_speed(p) * (t - p.t0) + p.rbar0) / p.rbar0;
}

}  // namespace

FrwParameters frw_parameters(double sigma, double gamma, double R0, double t0,
                             double rbar0, double G, int sign, double k) {
  require_unit_interval(sigma, "sigma");
  if (!(gamma >= 0.0)) throw ConfigError("gamma must be nonnegative");
  if (!(R0 > 0.0) || !(rbar0 > 0.0)) throw ConfigError("R0, rbar0 must be positive");
  if (!(G > 0.0)) throw ConfigError("G must be positive");
  if (sign != 1 && sign != -1) throw ConfigError("sign must be +1 or -1");
  FrwParameters p;
  p.sigma = sigma;
  p.k = k;
  p.R0 = R0;
  p.t0 = t0;
  p.rbar0 = rbar0;
  p.sign = sign;
  p.G = G;
  p.gamma = gamma;
  return p;
}

FrwParameters frw_from_sigma(double sigma, double R0, double t0, double rbar0,
                             double G, int sign) {
  const double sb = eos_sigma_bar_of_sigma(sigma);
  return frw_parameters(sigma, gamma_of_sigma_bar(sb, G), R0, t0, rbar0, G,
                        sign);
}

double frw_rbar(const FrwParameters& p, double t) {
  return p.sign * anchor_speed(p) * (t - p.t0) + p.rbar0;
}

double frw_rbar_dot(const FrwParameters& p) { return p.sign * anchor_speed(p); }

double frw_density(const FrwParameters& p, double t) {
  const double rb = frw_rbar(p, t);
  if (!(rb > 0.0)) throw ShockAtOrigin("frw_density: rbar(t) <= 0");
  return 3.0 * p.gamma / (rb * rb);
}

double frw_pressure(const FrwParameters& p, double t) {
  return p.sigma * frw_density(p, t);
}

double frw_scale(const FrwParameters& p, double t) {
  const double u = anchor_ratio(p, t);
  if (!(u > 0.0)) throw ShockAtOrigin("frw_scale: rbar(t) <= 0");
  return p.R0 * std::pow(u, scale_exponent(p));
}

double frw_scale_dot(const FrwParameters& p, double t) {
  const double u = anchor_ratio(p, t);
  if (!(u > 0.0)) throw ShockAtOrigin("frw_scale_dot: rbar(t) <= 0");
  const double q = scale_exponent(p);
  return p.R0 * q * std::pow(u, q - 1.0) * (p.sign * anchor_speed(p) / p.rbar0);
}

double frw_scale_ddot(const FrwParameters& p, double t) {
  const double u = anchor_ratio(p, t);
  if (!(u > 0.0)) throw ShockAtOrigin("frw_scale_ddot: rbar(t) <= 0");
  const double q = scale_exponent(p);
  const double du = anchor_speed(p) / p.rbar0;
  return p.R0 * q * (q - 1.0) * std::pow(u, q - 2.0) * du * du;
}

double frw_r(const FrwParameters& p, double t) {
  return frw_rbar(p, t) / frw_scale(p, t);
}

double frw_r_dot(const FrwParameters& p, double t) {
  const double R = frw_scale(p, t);
  return (frw_rbar_dot(p) - frw_r(p, t) * frw_scale_dot(p, t)) / R;
}

double frw_time_of_density(const FrwParameters& p, double rho) {
  if (!(p.gamma > 0.0))
    throw BranchError("frw_time_of_density: vacuum solution has no density branch");
  if (!(rho > 0.0))
    throw BranchError("frw_time_of_density: density not attained on this branch");
  const double rb = std::sqrt(3.0 * p.gamma / rho);
  return p.t0 + p.sign * (rb - p.rbar0) / anchor_speed(p);
}

double frw_time_of_density_quadrature(
    const FrwParameters& p, double rho,
    const std::function<double(double)>& pressure_of_rho, double abs_tol) {
  if (!(p.gamma > 0.0) || !(rho > 0.0))
    throw BranchError("quadrature branch requires positive density");
  const double rho0 = frw_density(p, p.t0);
  auto integrand = [&](double xi) {
    return 1.0 / ((xi + pressure_of_rho(xi)) * std::sqrt(24.0 * kPi * p.G * xi));
  };
  return p.t0 - p.sign * quad::integrate(integrand, rho0, rho, abs_tol);
}

namespace {

class FrwMetric final : public MetricSpec {
 public:
  explicit FrwMetric(const FrwParameters& p)
      : MetricSpec(MetricFamily::Frw, "frw",
                   {{"sigma", p.sigma},
                    {"k", p.k},
                    {"R0", p.R0},
                    {"t0", p.t0},
                    {"rbar0", p.rbar0},
                    {"sign", static_cast<double>(p.sign)},
                    {"G", p.G},
                    {"gamma", p.gamma}}),
        p_(p) {}

  Mat4 value(const Vec4& x) const override {
    const auto [R, f] = chart_factors(x);
    const double r = x[1];
    const double st = std::sin(x[2]);
    Mat4 g{};
    g[0][0] = -1.0;
    g[1][1] = R * R * f;
    g[2][2] = r * r * R * R;
    g[3][3] = r * r * R * R * st * st;
    return g;
  }

  Ten3 d1(const Vec4& x) const override {
    const auto [R, f] = chart_factors(x);
    const double Rd = frw_scale_dot(p_, x[0]);
    const double r = x[1];
    const double st = std::sin(x[2]);
    const double s2 = std::sin(2.0 * x[2]);
    const double fp = 2.0 * p_.k * r * f * f;
    Ten3 d;
    d(1, 1, 0) = 2.0 * R * Rd * f;
    d(1, 1, 1) = R * R * fp;
    d(2, 2, 0) = 2.0 * R * Rd * r * r;
    d(2, 2, 1) = 2.0 * r * R * R;
    d(3, 3, 0) = 2.0 * R * Rd * r * r * st * st;
    d(3, 3, 1) = 2.0 * r * R * R * st * st;
    d(3, 3, 2) = r * r * R * R * s2;
    return d;
  }

  Ten4 d2(const Vec4& x) const override {
    const auto [R, f] = chart_factors(x);
    const double Rd = frw_scale_dot(p_, x[0]);
    const double Rdd = frw_scale_ddot(p_, x[0]);
    const double r = x[1];
    const double st = std::sin(x[2]);
    const double s2 = std::sin(2.0 * x[2]);
    const double c2 = std::cos(2.0 * x[2]);
    const double k = p_.k;
    const double fp = 2.0 * k * r * f * f;
    const double fpp = 2.0 * k * f * f + 8.0 * k * k * r * r * f * f * f;
    const double tt = 2.0 * (Rd * Rd + R * Rdd);
    Ten4 d;
    auto set = [&d](int a, int b, int c, int e, double v) {
      d(a, b, c, e) = v;
      d(a, b, e, c) = v;
    };
    set(1, 1, 0, 0, tt * f);
    set(1, 1, 0, 1, 2.0 * R * Rd * fp);
    set(1, 1, 1, 1, R * R * fpp);
    set(2, 2, 0, 0, tt * r * r);
    set(2, 2, 0, 1, 4.0 * R * Rd * r);
    set(2, 2, 1, 1, 2.0 * R * R);
    set(3, 3, 0, 0, tt * r * r * st * st);
    set(3, 3, 0, 1, 4.0 * R * Rd * r * st * st);
    set(3, 3, 0, 2, 2.0 * R * Rd * r * r * s2);
    set(3, 3, 1, 1, 2.0 * R * R * st * st);
    set(3, 3, 1, 2, 2.0 * r * R * R * s2);
    set(3, 3, 2, 2, 2.0 * r * r * R * R * c2);
    return d;
  }

 private:
  std::pair<double, double> chart_factors(const Vec4& x) const {
    const double u = anchor_ratio(p_, x[0]);
    if (!(u > 0.0)) throw OutOfDomain("frw chart: rbar(t) <= 0");
    const double kr2 = p_.k * x[1] * x[1];
    if (!(1.0 - kr2 > 0.0)) throw OutOfDomain("frw chart: 1 - k r^2 <= 0");
    return {p_.R0 * std::pow(u, scale_exponent(p_)), 1.0 / (1.0 - kr2)};
  }

  FrwParameters p_;
};

}  // namespace

MetricPtr frw_metric(const FrwParameters& p) {
  return std::make_shared<const FrwMetric>(p);
}

namespace {

double rel_diff(double a, double b) {
  const double mag = std::max(std::fabs(a), std::fabs(b));
  if (mag == 0.0) return 0.0;
  return std::fabs(a - b) / mag;
}

}  // namespace

double frw_ode1_residual(const FrwParameters& p, double t) {
  if (p.gamma == 0.0) return 0.0;
  const double h = fd::central_step(std::max(1.0, std::fabs(t)));
  const double rho_dot =
      fd::richardson_diff([&](double s) { return frw_density(p, s); }, t, h);
  const double R_dot =
      fd::richardson_diff([&](double s) { return frw_scale(p, s); }, t, h);
  const double implied =
      -frw_density(p, t) - frw_scale(p, t) * rho_dot / (3.0 * R_dot);
  return std::fabs(implied - frw_pressure(p, t)) / frw_density(p, t);
}

double frw_ode2_residual(const FrwParameters& p, double t) {
  const double h = fd::central_step(std::max(1.0, std::fabs(t)));
  const double R_dot =
      fd::richardson_diff([&](double s) { return frw_scale(p, s); }, t, h);
  const double R = frw_scale(p, t);
  const double lhs = R_dot * R_dot + p.k;
  const double rhs = 8.0 * kPi * p.G / 3.0 * frw_density(p, t) * R * R;
  return rel_diff(lhs, rhs);
}

double frw_drr_residual(const FrwParameters& p, double t) {
  if (p.gamma == 0.0) return 0.0;
  const double h = fd::central_step(std::max(1.0, std::fabs(t)));
  const double rho_dot =
      fd::richardson_diff([&](double s) { return frw_density(p, s); }, t, h);
  const double R_dot =
      fd::richardson_diff([&](double s) { return frw_scale(p, s); }, t, h);
  const double lhs = R_dot / frw_scale(p, t);
  const double rhs = -rho_dot / (3.0 * (frw_density(p, t) + frw_pressure(p, t)));
  return rel_diff(lhs, rhs);
}

// --------------------------------------------------------------------------
// Static side
// --------------------------------------------------------------------------

TovParameters tov_solve(double sigma_bar, double B0, double rbar0, double G) {
  require_unit_interval(sigma_bar, "sigma_bar");
  if (!(B0 > 0.0) || !(rbar0 > 0.0)) throw ConfigError("B0, rbar0 must be positive");
  if (!(G > 0.0)) throw ConfigError("G must be positive");
  TovParameters p;
  p.sigma_bar = sigma_bar;
  p.gamma = gamma_of_sigma_bar(sigma_bar, G);
  p.A = 1.0 - 8.0 * kPi * G * p.gamma;
  p.B0 = B0;
  p.rbar0 = rbar0;
  p.G = G;
  return p;
}

namespace {

void require_inside(const TovParameters&, double rbar) {
  if (!(rbar > 0.0)) throw OutOfDomain("tov chart: rbar <= 0");
}

double b_exponent(const TovParameters& p) {
  return 4.0 * p.sigma_bar / (1.0 + p.sigma_bar);
}

}  // namespace

double tov_density(const TovParameters& p, double rbar) {
  require_inside(p, rbar);
  return p.gamma / (rbar * rbar);
}

double tov_pressure(const TovParameters& p, double rbar) {
  return p.sigma_bar * tov_density(p, rbar);
}

double tov_mass(const TovParameters& p, double rbar) {
  require_inside(p, rbar);
  return 4.0 * kPi * p.gamma * rbar;
}

double tov_B(const TovParameters& p, double rbar) {
  require_inside(p, rbar);
  return p.B0 * std::pow(rbar / p.rbar0, b_exponent(p));
}

namespace {

class TovMetric final : public MetricSpec {
 public:
  explicit TovMetric(const TovParameters& p)
      : MetricSpec(MetricFamily::Tov, "tov",
                   {{"sigma_bar", p.sigma_bar},
                    {"gamma", p.gamma},
                    {"A", p.A},
                    {"B0", p.B0},
                    {"rbar0", p.rbar0},
                    {"G", p.G}}),
        p_(p) {}

  Mat4 value(const Vec4& x) const override {
    require_inside(p_, x[1]);
    const double rb = x[1];
    const double st = std::sin(x[2]);
    Mat4 g{};
    g[0][0] = -tov_B(p_, rb);
    g[1][1] = 1.0 / p_.A;
    g[2][2] = rb * rb;
    g[3][3] = rb * rb * st * st;
    return g;
  }

  Ten3 d1(const Vec4& x) const override {
    require_inside(p_, x[1]);
    const double rb = x[1];
    const double st = std::sin(x[2]);
    const double s2 = std::sin(2.0 * x[2]);
    const double beta = b_exponent(p_);
    Ten3 d;
    d(0, 0, 1) = -beta * tov_B(p_, rb) / rb;
    d(2, 2, 1) = 2.0 * rb;
    d(3, 3, 1) = 2.0 * rb * st * st;
    d(3, 3, 2) = rb * rb * s2;
    return d;
  }

  Ten4 d2(const Vec4& x) const override {
    require_inside(p_, x[1]);
    const double rb = x[1];
    const double st = std::sin(x[2]);
    const double s2 = std::sin(2.0 * x[2]);
    const double c2 = std::cos(2.0 * x[2]);
    const double beta = b_exponent(p_);
    Ten4 d;
    auto set = [&d](int a, int b, int c, int e, double v) {
      d(a, b, c, e) = v;
      d(a, b, e, c) = v;
    };
    set(0, 0, 1, 1, -beta * (beta - 1.0) * tov_B(p_, rb) / (rb * rb));
    set(2, 2, 1, 1, 2.0);
    set(3, 3, 1, 1, 2.0 * st * st);
    set(3, 3, 1, 2, 2.0 * rb * s2);
    set(3, 3, 2, 2, 2.0 * rb * rb * c2);
    return d;
  }

 private:
  TovParameters p_;
};

}  // namespace

MetricPtr tov_metric(const TovParameters& p) {
  return std::make_shared<const TovMetric>(p);
}

double tov_ove_residual(const TovParameters& p, double rbar) {
  if (p.sigma_bar == 0.0) return 0.0;
  const double h = fd::central_step(std::max(1.0, rbar));
  const double p_prime =
      fd::richardson_diff([&](double s) { return tov_pressure(p, s); }, rbar, h);
  const double M = tov_mass(p, rbar);
  const double rho = tov_density(p, rbar);
  const double pr = tov_pressure(p, rbar);
  const double lhs = -rbar * rbar * p_prime;
  const double rhs = p.G * M * rho * (1.0 + pr / rho) *
                     (1.0 + 4.0 * kPi * rbar * rbar * rbar * pr / M) /
                     (1.0 - 2.0 * p.G * M / rbar);
  return rel_diff(lhs, rhs);
}

double tov_mass_derivative_residual(const TovParameters& p, double rbar) {
  const double h = fd::central_step(std::max(1.0, rbar));
  const double m_prime =
      fd::richardson_diff([&](double s) { return tov_mass(p, s); }, rbar, h);
  const double rhs = 4.0 * kPi * rbar * rbar * tov_density(p, rbar);
  return rel_diff(m_prime, rhs);
}

double tov_bb_residual(const TovParameters& p, double rbar) {
  if (p.sigma_bar == 0.0) return 0.0;
  const double h = fd::central_step(std::max(1.0, rbar));
  const double b_prime =
      fd::richardson_diff([&](double s) { return tov_B(p, s); }, rbar, h);
  const double p_prime =
      fd::richardson_diff([&](double s) { return tov_pressure(p, s); }, rbar, h);
  const double lhs = b_prime / tov_B(p, rbar);
  const double rhs =
      -2.0 * p_prime / (tov_pressure(p, rbar) + tov_density(p, rbar));
  return rel_diff(lhs, rhs);
}

}  // namespace nullshock::exact

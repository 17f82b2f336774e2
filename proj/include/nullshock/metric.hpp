#pragma once

#include <map>
#include <memory>
#include <string>

#include "nullshock/linalg.hpp"

namespace nullshock {

// A point is coordinates plus the name of the chart they live in. The chart
// tag is bookkeeping for error messages and registries; numeric operations
// work on the coordinate tuple.
struct SpacetimePoint {
  std::string chart;
  Vec4 x{};
};

enum class MetricFamily { Minkowski, Frw, Tov, Custom };

// Lorentzian metric on a coordinate chart, with hand-coded analytic first
// and second coordinate derivatives. Finite differencing is used only to
// cross-check these in tests, never as the primary evaluation path.
class MetricSpec {
 public:
  MetricSpec(MetricFamily family, std::string chart_name,
             std::map<std::string, double> params)
      : family_(family),
        chart_name_(std::move(chart_name)),
        params_(std::move(params)) {}
  virtual ~MetricSpec() = default;

  MetricFamily family() const { return family_; }
  const std::string& chart_name() const { return chart_name_; }
  const std::map<std::string, double>& params() const { return params_; }

  // g_{ab}(x); throws OutOfDomain outside the chart.
  virtual Mat4 value(const Vec4& x) const = 0;
  // g_{ab,c}(x), indexed (a, b, c).
  virtual Ten3 d1(const Vec4& x) const = 0;
  // g_{ab,cd}(x), indexed (a, b, c, d).
  virtual Ten4 d2(const Vec4& x) const = 0;

  SpacetimePoint point(double x0, double x1, double x2, double x3) const {
    return SpacetimePoint{chart_name_, Vec4{x0, x1, x2, x3}};
  }

 private:
  MetricFamily family_;
  std::string chart_name_;
  std::map<std::string, double> params_;
};

using MetricPtr = std::shared_ptr<const MetricSpec>;

// Flat metric diag(-1,1,1,1) on Cartesian coordinates (t,x,y,z).
MetricPtr minkowski_metric();

}  // namespace nullshock

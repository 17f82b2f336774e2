#include "nullshock/metric.hpp"

namespace nullshock {

namespace {

class MinkowskiMetric final : public MetricSpec {
 public:
  MinkowskiMetric() : MetricSpec(MetricFamily::Minkowski, "minkowski", {}) {}

  Mat4 value(const Vec4&) const override {
    Mat4 g{};
    g[0][0] = -1.0;
    g[1][1] = 1.0;
    g[2][2] = 1.0;
    g[3][3] = 1.0;
    return g;
  }

  Ten3 d1(const Vec4&) const override { return Ten3{}; }
  Ten4 d2(const Vec4&) const override { return Ten4{}; }
};

}  // namespace

MetricPtr minkowski_metric() {
  static const auto m = std::make_shared<const MinkowskiMetric>();
  return m;
}

}  // namespace nullshock

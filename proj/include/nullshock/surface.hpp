#pragma once

#include <functional>
#include <memory>

#include "nullshock/linalg.hpp"
#include "nullshock/metric.hpp"
#include "nullshock/tensor.hpp"

namespace nullshock::surf {

// Hypersurface given as the zero set of a level function. grad may be left
// empty, in which case the gradient is taken by finite differences.
struct LevelSurface {
  std::function<double(const Vec4&)> phi;
  std::function<Vec4(const Vec4&)> grad;
};

struct NormalData {
  Vec4 cov{};  // n_a = phi_{,a}
  Vec4 con{};  // n^a = g^{ab} n_b
};

// Throws ZeroGradient when |grad phi| < 1e-12 * coordinate scale.
NormalData surface_normal(const LevelSurface& s, const MetricSpec& m,
                          const Vec4& x);

struct LightlikeResult {
  bool lightlike = false;
  double residual = 0.0;  // g^{ab} n_a n_b
};
// Lightlike iff |g(n,n)| < 1e-8 * |n|^2 (Euclidean component norm).
LightlikeResult is_lightlike(const LevelSurface& s, const MetricSpec& m,
                             const Vec4& x);

struct TransverseVector {
  Vec4 con{};
  double eta = 0.0;  // <N, n>
};

struct TransverseOptions {
  // Shift along n so that g(N,N) = 1 (a transverse-gauge move that leaves
  // <N,n> and the surface pairings unchanged).
  bool unit_normalize = true;
  // Spatial surface directions N is made orthogonal to.
  std::array<Vec4, 2> spatial_basis{Vec4{0.0, 0.0, 1.0, 0.0},
                                    Vec4{0.0, 0.0, 0.0, 1.0}};
};

// Scale the seed so <N,n> = eta, project out the spatial surface directions,
// then optionally normalize g(N,N) = 1 by a shift along n. Throws
// NoTransverse when <seed,n> is numerically zero (e.g. seed tangent to a
// null surface).
TransverseVector choose_transverse(const MetricSpec& m, const Vec4& x,
                                   const NormalData& n, double eta,
                                   const Vec4& seed,
                                   const TransverseOptions& opts = {});

enum class Side { Left, Right };

// Two metrics glued along a parametrized hypersurface.
//
// y = (y1, y2, y3) are surface coordinates: y1 flows along the null tangent
// n (so d(point)/dy1 = n^a), y2/y3 along the remaining spatial directions
// (shared by both charts). Point identification across the surface and the
// chart jacobian of that identification are part of the object. The default
// transverse field is given in left-chart components; its right-chart form
// is the jacobian push-forward.
class TwoSidedMetric {
 public:
  virtual ~TwoSidedMetric() = default;

  virtual MetricPtr metric(Side side) const = 0;
  virtual Vec4 surface_point(Side side, const Vec3& y) const = 0;
  virtual Vec4 normal_cov(Side side, const Vec3& y) const = 0;
  // d x_right / d x_left on the surface.
  virtual Mat4 jacobian_right_from_left(const Vec3& y) const = 0;
  // Tangent of the y1 flow; defaults to the raised normal.
  virtual Vec4 surface_tangent_y1(Side side, const Vec3& y) const;
  // Spatial surface basis vectors (coordinate directions 2 and 3 by default).
  virtual Vec4 surface_tangent(Side side, const Vec3& y, int a) const;
  virtual Vec4 transverse_left(const Vec3& y) const = 0;
  virtual double eta() const = 0;
};

// Transverse field components on the requested side (right = push-forward).
Vec4 transverse_on(const TwoSidedMetric& tm, Side side, const Vec3& y);

// Lipschitz matching check: max |(pullback of right metric) - left metric|
// at the surface point y, in left-chart components.
double metric_jump_norm(const TwoSidedMetric& tm, const Vec3& y);

struct MgsOptions {
  double patch_size = 1.0;
  // Shift N along n so g(N,N) = 1 on the surface (chart-time normalization).
  bool unit_transverse = true;
  // Scale w2, w3 so the angular metric entries are 1 at the base point.
  bool unit_angular = true;
  // One-sided stencil step across the surface, as a fraction of patch_size.
  double deriv_step_factor = 1e-4;
  // Step for chart-jacobian central differences, fraction of patch_size.
  double jac_step_factor = 1e-3;
  int geodesic_steps = 32;
  // Replaces the glued metric's transverse field when set (left components).
  std::function<Vec4(const Vec3&)> transverse_override;
};

// Chart adapted to the surface: w0 is affine parameter along the geodesics
// issued in the transverse direction (positive toward Right), w1 runs along
// n inside the surface, w2/w3 along the spatial directions.
class MgsChart {
 public:
  MgsChart(std::shared_ptr<const TwoSidedMetric> tm, Vec3 base_y,
           MgsOptions opts);

  struct AmbientPoint {
    Side side = Side::Left;
    Vec4 x{};
    Vec4 v{};  // geodesic tangent = d x / d w0
  };

  // Chart -> ambient. Throws PatchTooLarge when |w0| or |w1| exceeds the
  // patch, ChartExit when the geodesic leaves its chart.
  AmbientPoint from_mgs(const Vec4& w) const;
  // Ambient -> chart by damped Newton on from_mgs. The returned w carries
  // the sign convention of the requested side.
  Vec4 to_mgs(Side side, const Vec4& x) const;

  // Pulled-back metric at w: J^T g J with J = d(ambient)/d(chart). The w0
  // column of J is the exact geodesic tangent; the others are high-order
  // central differences. Throws PatchTooLarge past conditioning 1e6.
  Mat4 chart_metric(const Vec4& w) const;

  // Chart metric on the surface from the exact frame vectors (no geodesic
  // integration): rows/cols ordered (w0, w1, w2, w3).
  Mat4 chart_metric_on_surface(Side side, double y1_offset = 0.0) const;

  // Transverse field actually used by the fan (after overrides/gauge moves).
  Vec4 transverse_used(Side side, const Vec3& y) const;

  const TwoSidedMetric& glued() const { return *tm_; }
  const MgsOptions& options() const { return opts_; }
  const Vec3& base_y() const { return base_y_; }
  double eta() const { return tm_->eta(); }
  double angular_scale(int a) const { return a == 2 ? k2_ : k3_; }

 private:
  Vec3 absolute_y(const Vec4& w) const;

  std::shared_ptr<const TwoSidedMetric> tm_;
  Vec3 base_y_{};
  MgsOptions opts_;
  double k2_ = 1.0;
  double k3_ = 1.0;
};

MgsChart build_mgs_chart(std::shared_ptr<const TwoSidedMetric> tm,
                         const Vec3& base_y, const MgsOptions& opts = {});

// Second fundamental form K_ab = -1/2 d g_ab / d w0 at the base point,
// a, b in {1,2,3}, one-sided toward the named side.
Mat3 generalized_second_form(const MgsChart& chart, Side side);

struct SecondFormJump {
  Mat3 jump{};       // left minus right
  double max_abs = 0.0;
};
SecondFormJump jump_second_form(const MgsChart& chart);

// One-sided second derivatives [g_tt,00] (left minus right) for t = 2, 3:
// the extra matching conditions peculiar to a null surface.
std::array<double, 2> extra_c2_jumps(const MgsChart& chart);

// Directional derivative N(c) of the areal metric entry at the base point;
// the spherical junction analysis requires it nonzero.
double area_derivative(const MgsChart& chart);

// Gram matrix of the frame ((n - eta N)/eta, N, e2/|e2|, e3/|e3|) at the
// base point; diag(-1,1,1,1) when the chart is unit-normalized.
Mat4 lorentz_frame_gram(const MgsChart& chart);

}  // namespace nullshock::surf

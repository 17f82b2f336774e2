#pragma once

#include <functional>
#include <vector>

#include "nullshock/linalg.hpp"
#include "nullshock/metric.hpp"

namespace nullshock::tensor {

// Degeneracy floor: inversion requires |det g| >= 1e-12 * scale^4 where
// scale = max |g_ab|.
double degeneracy_floor(const Mat4& g);

// g^{ab}; throws DegenerateMetric below the floor.
Mat4 inverse_metric(const MetricSpec& m, const Vec4& x);
Mat4 inverse_metric(const Mat4& g);

// Connection coefficients G^s_{ab} = 1/2 g^{sc}(-g_{ab,c} + g_{ca,b} + g_{bc,a}),
// indexed (s, a, b); symmetric in (a, b).
Ten3 christoffel(const MetricSpec& m, const Vec4& x);

// Coordinate derivatives of the connection, d_n G^s_{ab}, indexed (s,a,b,n).
// Built from analytic metric d1/d2, no finite differencing.
Ten4 christoffel_derivative(const MetricSpec& m, const Vec4& x);

// Curvature tensor R^m_{anb} = G^m_{ab,n} - G^m_{an,b}
//                            + G^m_{sn} G^s_{ab} - G^m_{sb} G^s_{an},
// indexed (m, a, n, b).
Ten4 riemann(const MetricSpec& m, const Vec4& x);

// R_{ab} = R^n_{anb}
Mat4 ricci(const MetricSpec& m, const Vec4& x);
double ricci_scalar(const MetricSpec& m, const Vec4& x);

// G_{ab} = R_{ab} - 1/2 g_{ab} R, plus raised and mixed forms.
Mat4 einstein_cov(const MetricSpec& m, const Vec4& x);
Mat4 einstein_con(const MetricSpec& m, const Vec4& x);
Mat4 einstein_mixed(const MetricSpec& m, const Vec4& x);

// Independent route to G^a_b: sums of doubly-raised curvature components
// over increasing index pairs (diagonal entries with a minus sign,
// off-diagonal entries summed over the complementary index).
Mat4 einstein_mixed_from_pair_sums(const MetricSpec& m, const Vec4& x);

enum class CausalClass { Spacelike, Lightlike, Timelike };

// Sign of g(v,v) with a +/- 1e-10 * |v|^2 dead band mapped to Lightlike
// (|v|^2 the Euclidean component norm).
CausalClass classify_vector(const MetricSpec& m, const Vec4& x, const Vec4& v);
CausalClass classify_vector(const Mat4& g, const Vec4& v);

struct GeodesicCurve {
  std::vector<double> s;
  std::vector<Vec4> x;
  std::vector<Vec4> v;
};

// Classical fixed-step RK4 for x'' + G(x) x' x' = 0 from s = 0 to s_end.
// No adaptive control; accuracy is governed by the step count. Domain
// errors from the metric surface as ChartExit.
GeodesicCurve geodesic_integrate(const MetricSpec& m, const Vec4& x0,
                                 const Vec4& v0, double s_end, int steps);

struct GeodesicState {
  Vec4 x{};
  Vec4 v{};
};
// Endpoint-only variant used by chart construction.
GeodesicState geodesic_endpoint(const MetricSpec& m, const Vec4& x0,
                                const Vec4& v0, double s_end, int steps);

// Max |x'' + G x'x'| over interior samples, with x'' reconstructed from the
// stored tangents by high-order central differences.
double geodesic_max_residual(const MetricSpec& m, const GeodesicCurve& c);

// Max |g(v,v) - g(v0,v0)| over the curve: affine parametrization check.
double geodesic_norm_drift(const MetricSpec& m, const GeodesicCurve& c);

struct FluidState {
  double rho = 0.0;
  double p = 0.0;
  Vec4 u{};
};

// Static observer u = (1/sqrt(-g_00), 0, 0, 0); requires g_00 < 0.
Vec4 comoving_observer(const MetricSpec& m, const Vec4& x);

// Perfect fluid T^{ab} = p g^{ab} + (p + rho) u^a u^b.
// Throws UnnormalizedVelocity unless g(u,u) = -1 within 1e-8.
Mat4 stress_energy(const FluidState& f, const MetricSpec& m, const Vec4& x);

using TensorField2 = std::function<Mat4(const Vec4&)>;

// (div T)^a = d_b T^{ab} + G^a_{sb} T^{sb} + G^b_{sb} T^{as} for a symmetric
// contravariant field; the partial derivatives are Richardson-extrapolated
// central differences with step h.
Vec4 covariant_divergence(const TensorField2& t_con, const MetricSpec& m,
                          const Vec4& x, double h);

// Dense component block of a rank-(k,l) tensor at a point, contravariant
// slots stored before covariant ones, row-major.
struct TensorComponents {
  int k = 0;
  int l = 0;
  std::vector<double> comp;

  int rank() const { return k + l; }
  static TensorComponents zeros(int k, int l);
  double& at(const std::vector<int>& idx);
  double at(const std::vector<int>& idx) const;
};

// Change of chart: contravariant slots contract with jac = dy/dx, covariant
// slots with jac_inv = dx/dy. Throws BadJacobian unless jac * jac_inv = I
// within 1e-10.
TensorComponents transform_tensor(const TensorComponents& t, const Mat4& jac,
                                  const Mat4& jac_inv);

// Slot index is over the combined list, contravariant first. A lowered slot
// becomes the first covariant slot; a raised one the last contravariant slot.
TensorComponents lower_index(const TensorComponents& t, int slot,
                             const MetricSpec& m, const Vec4& x);
TensorComponents raise_index(const TensorComponents& t, int slot,
                             const MetricSpec& m, const Vec4& x);

}  // namespace nullshock::tensor

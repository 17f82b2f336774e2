#include "nullshock/tensor.hpp"

#include <cmath>
#include <sstream>

#include "nullshock/errors.hpp"

namespace nullshock::tensor {

double degeneracy_floor(const Mat4& g) {
  const double scale = std::max(mat4_max_abs(g), 1e-300);
  return 1e-12 * scale * scale * scale * scale;
}

Mat4 inverse_metric(const Mat4& g) {
  const double det = mat4_det(g);
  if (std::fabs(det) < degeneracy_floor(g)) {
    std::ostringstream os;
    os << "inverse_metric: |det g| = " << std::fabs(det)
       << " below degeneracy floor " << degeneracy_floor(g);
    throw DegenerateMetric(os.str());
  }
  return mat4_inverse(g);
}

Mat4 inverse_metric(const MetricSpec& m, const Vec4& x) {
  return inverse_metric(m.value(x));
}

namespace {

// 1/2 (-g_{ab,c} + g_{ca,b} + g_{bc,a})
inline double lowered_connection(const Ten3& d1, int a, int b, int c) {
  return 0.5 * (-d1(a, b, c) + d1(c, a, b) + d1(b, c, a));
}

}  // namespace

Ten3 christoffel(const MetricSpec& m, const Vec4& x) {
  const Ten3 d1 = m.d1(x);
  const Mat4 ginv = inverse_metric(m, x);
  Ten3 gamma;
  for (int s = 0; s < 4; ++s)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        double v = 0.0;
        for (int c = 0; c < 4; ++c)
          v += ginv[s][c] * lowered_connection(d1, a, b, c);
        gamma(s, a, b) = v;
        gamma(s, b, a) = v;
      }
  return gamma;
}

Ten4 christoffel_derivative(const MetricSpec& m, const Vec4& x) {
  const Ten3 d1 = m.d1(x);
  const Ten4 d2 = m.d2(x);
  const Mat4 ginv = inverse_metric(m, x);

  // d_n g^{sc} = -g^{sa} g_{ab,n} g^{bc}
  Ten3 dginv;
  for (int s = 0; s < 4; ++s)
    for (int c = 0; c < 4; ++c)
      for (int n = 0; n < 4; ++n) {
        double v = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            v -= ginv[s][a] * d1(a, b, n) * ginv[b][c];
        dginv(s, c, n) = v;
      }

  auto dlowered = [&](int a, int b, int c, int n) {
    return 0.5 * (-d2(a, b, c, n) + d2(c, a, b, n) + d2(b, c, a, n));
  };

  Ten4 dgamma;
  for (int s = 0; s < 4; ++s)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        for (int n = 0; n < 4; ++n) {
          double v = 0.0;
          for (int c = 0; c < 4; ++c)
            v += dginv(s, c, n) * lowered_connection(d1, a, b, c) +
                 ginv[s][c] * dlowered(a, b, c, n);
          dgamma(s, a, b, n) = v;
          dgamma(s, b, a, n) = v;
        }
  return dgamma;
}

Ten4 riemann(const MetricSpec& m, const Vec4& x) {
  const Ten3 gamma = christoffel(m, x);
  const Ten4 dgamma = christoffel_derivative(m, x);
  Ten4 r;
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int n = 0; n < 4; ++n)
        for (int b = 0; b < 4; ++b) {
          double v = dgamma(mu, a, b, n) - dgamma(mu, a, n, b);
          for (int s = 0; s < 4; ++s)
            v += gamma(mu, s, n) * gamma(s, a, b) -
                 gamma(mu, s, b) * gamma(s, a, n);
          r(mu, a, n, b) = v;
        }
  return r;
}

Mat4 ricci(const MetricSpec& m, const Vec4& x) {
  const Ten4 r = riemann(m, x);
  Mat4 rc{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0.0;
      for (int n = 0; n < 4; ++n) v += r(n, a, n, b);
      rc[a][b] = v;
    }
  return rc;
}

double ricci_scalar(const MetricSpec& m, const Vec4& x) {
  const Mat4 rc = ricci(m, x);
  const Mat4 ginv = inverse_metric(m, x);
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s += ginv[a][b] * rc[a][b];
  return s;
}

Mat4 einstein_cov(const MetricSpec& m, const Vec4& x) {
  const Mat4 rc = ricci(m, x);
  const Mat4 g = m.value(x);
  const Mat4 ginv = inverse_metric(g);
  double rs = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rs += ginv[a][b] * rc[a][b];
  Mat4 e{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) e[a][b] = rc[a][b] - 0.5 * g[a][b] * rs;
  return e;
}

Mat4 einstein_con(const MetricSpec& m, const Vec4& x) {
  const Mat4 e = einstein_cov(m, x);
  const Mat4 ginv = inverse_metric(m, x);
  Mat4 up{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0.0;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) v += ginv[a][c] * ginv[b][d] * e[c][d];
      up[a][b] = v;
    }
  return up;
}

Mat4 einstein_mixed(const MetricSpec& m, const Vec4& x) {
  const Mat4 e = einstein_cov(m, x);
  const Mat4 ginv = inverse_metric(m, x);
  Mat4 mix{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0.0;
      for (int c = 0; c < 4; ++c) v += ginv[a][c] * e[c][b];
      mix[a][b] = v;
    }
  return mix;
}

Mat4 einstein_mixed_from_pair_sums(const MetricSpec& m, const Vec4& x) {
  const Ten4 r = riemann(m, x);
  const Mat4 ginv = inverse_metric(m, x);
  // Doubly raised curvature R^{ab}_{cd} = g^{bm} R^a_{mcd}.
  Ten4 r2;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.0;
          for (int mm = 0; mm < 4; ++mm) v += ginv[b][mm] * r(a, mm, c, d);
          r2(a, b, c, d) = v;
        }
  // Entry with both pairs written in increasing order; swaps flip sign.
  auto pair_entry = [&](int a, int b, int c, int d) {
    double sign = 1.0;
    if (a > b) {
      std::swap(a, b);
      sign = -sign;
    }
    if (c > d) {
      std::swap(c, d);
      sign = -sign;
    }
    return sign * r2(a, b, c, d);
  };
  Mat4 g_mixed{};
  for (int a = 0; a < 4; ++a) {
    double diag = 0.0;
    for (int s = 0; s < 4; ++s) {
      if (s == a) continue;
      for (int t = s + 1; t < 4; ++t) {
        if (t == a) continue;
        diag += pair_entry(s, t, s, t);
      }
    }
    g_mixed[a][a] = -diag;
    for (int b = 0; b < 4; ++b) {
      if (b == a) continue;
      double off = 0.0;
      for (int t = 0; t < 4; ++t) {
        if (t == a || t == b) continue;
        off += pair_entry(a, t, b, t);
      }
      g_mixed[a][b] = off;
    }
  }
  return g_mixed;
}

CausalClass classify_vector(const Mat4& g, const Vec4& v) {
  const double q = metric_dot(g, v, v);
  const double band = 1e-10 * vec4_dot(v, v);
  if (std::fabs(q) <= band) return CausalClass::Lightlike;
  return q > 0.0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

CausalClass classify_vector(const MetricSpec& m, const Vec4& x,
                            const Vec4& v) {
  return classify_vector(m.value(x), v);
}

namespace {

struct OdeState {
  Vec4 x{};
  Vec4 v{};
};

OdeState rhs(const MetricSpec& m, const OdeState& s) {
  const Ten3 gamma = christoffel(m, s.x);
  OdeState d;
  d.x = s.v;
  for (int a = 0; a < 4; ++a) {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) acc += gamma(a, i, j) * s.v[i] * s.v[j];
    d.v[a] = -acc;
  }
  return d;
}

OdeState axpy(const OdeState& s, double c, const OdeState& d) {
  OdeState r;
  for (int i = 0; i < 4; ++i) {
    r.x[i] = s.x[i] + c * d.x[i];
    r.v[i] = s.v[i] + c * d.v[i];
  }
  return r;
}

OdeState rk4_step(const MetricSpec& m, const OdeState& s, double h) {
  const OdeState k1 = rhs(m, s);
  const OdeState k2 = rhs(m, axpy(s, h / 2.0, k1));
  const OdeState k3 = rhs(m, axpy(s, h / 2.0, k2));
  const OdeState k4 = rhs(m, axpy(s, h, k3));
  OdeState r;
  for (int i = 0; i < 4; ++i) {
    r.x[i] = s.x[i] + h / 6.0 * (k1.x[i] + 2.0 * k2.x[i] + 2.0 * k3.x[i] + k4.x[i]);
    r.v[i] = s.v[i] + h / 6.0 * (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]);
  }
  return r;
}

}  // namespace

GeodesicCurve geodesic_integrate(const MetricSpec& m, const Vec4& x0,
                                 const Vec4& v0, double s_end, int steps) {
  if (steps < 1) throw Error("geodesic_integrate: steps must be >= 1");
  GeodesicCurve c;
  c.s.reserve(steps + 1);
  c.x.reserve(steps + 1);
  c.v.reserve(steps + 1);
  OdeState st{x0, v0};
  c.s.push_back(0.0);
  c.x.push_back(st.x);
  c.v.push_back(st.v);
  const double h = s_end / steps;
  try {
    for (int i = 1; i <= steps; ++i) {
      st = rk4_step(m, st, h);
      if (!all_finite(st.x) || !all_finite(st.v))
        throw OutOfDomain("geodesic state not finite");
      c.s.push_back(h * i);
      c.x.push_back(st.x);
      c.v.push_back(st.v);
    }
  } catch (const OutOfDomain& e) {
    throw ChartExit(std::string("geodesic left the chart: ") + e.what());
  } catch (const DegenerateMetric& e) {
    throw ChartExit(std::string("geodesic hit a degenerate metric: ") + e.what());
  }
  return c;
}

GeodesicState geodesic_endpoint(const MetricSpec& m, const Vec4& x0,
                                const Vec4& v0, double s_end, int steps) {
  if (s_end == 0.0) return GeodesicState{x0, v0};
  const GeodesicCurve c = geodesic_integrate(m, x0, v0, s_end, steps);
  return GeodesicState{c.x.back(), c.v.back()};
}

double geodesic_max_residual(const MetricSpec& m, const GeodesicCurve& c) {
  const int n = static_cast<int>(c.s.size());
  if (n < 5) return 0.0;
  const double h = c.s[1] - c.s[0];
  double worst = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    const Ten3 gamma = christoffel(m, c.x[i]);
    for (int a = 0; a < 4; ++a) {
      // Five-point central derivative of the stored tangent.
      const double dv = (c.v[i - 2][a] - 8.0 * c.v[i - 1][a] +
                         8.0 * c.v[i + 1][a] - c.v[i + 2][a]) /
                        (12.0 * h);
      double acc = 0.0;
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          acc += gamma(a, p, q) * c.v[i][p] * c.v[i][q];
      worst = std::max(worst, std::fabs(dv + acc));
    }
  }
  return worst;
}

double geodesic_norm_drift(const MetricSpec& m, const GeodesicCurve& c) {
  if (c.s.empty()) return 0.0;
  const double q0 = metric_dot(m.value(c.x[0]), c.v[0], c.v[0]);
  double worst = 0.0;
  for (size_t i = 1; i < c.s.size(); ++i) {
    const double q = metric_dot(m.value(c.x[i]), c.v[i], c.v[i]);
    worst = std::max(worst, std::fabs(q - q0));
  }
  return worst;
}

Vec4 comoving_observer(const MetricSpec& m, const Vec4& x) {
  const Mat4 g = m.value(x);
  if (!(g[0][0] < 0.0))
    throw UnnormalizedVelocity("comoving_observer: g_00 must be negative");
  return Vec4{1.0 / std::sqrt(-g[0][0]), 0.0, 0.0, 0.0};
}

Mat4 stress_energy(const FluidState& f, const MetricSpec& m, const Vec4& x) {
  const Mat4 g = m.value(x);
  const double norm = metric_dot(g, f.u, f.u);
  if (std::fabs(norm + 1.0) > 1e-8 * std::max(1.0, std::fabs(norm))) {
    std::ostringstream os;
    os << "stress_energy: g(u,u) = " << norm << ", expected -1";
    throw UnnormalizedVelocity(os.str());
  }
  const Mat4 ginv = inverse_metric(g);
  Mat4 t{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      t[a][b] = f.p * ginv[a][b] + (f.p + f.rho) * f.u[a] * f.u[b];
  return t;
}

Vec4 covariant_divergence(const TensorField2& t_con, const MetricSpec& m,
                          const Vec4& x, double h) {
  const Ten3 gamma = christoffel(m, x);
  const Mat4 t0 = t_con(x);
  // Richardson-extrapolated central partial derivatives of T^{ab}.
  Ten3 dt;
  for (int c = 0; c < 4; ++c) {
    auto sample = [&](double step) {
      Vec4 xp = x, xm = x;
      xp[c] += step;
      xm[c] -= step;
      const Mat4 tp = t_con(xp);
      const Mat4 tm = t_con(xm);
      Mat4 d{};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) d[a][b] = (tp[a][b] - tm[a][b]) / (2.0 * step);
      return d;
    };
    const Mat4 d_h = sample(h);
    const Mat4 d_h2 = sample(h / 2.0);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        dt(a, b, c) = (4.0 * d_h2[a][b] - d_h[a][b]) / 3.0;
  }
  Vec4 div{};
  for (int a = 0; a < 4; ++a) {
    double v = 0.0;
    for (int b = 0; b < 4; ++b) {
      v += dt(a, b, b);
      for (int s = 0; s < 4; ++s)
        v += gamma(a, s, b) * t0[s][b] + gamma(b, s, b) * t0[a][s];
    }
    div[a] = v;
  }
  return div;
}

TensorComponents TensorComponents::zeros(int k, int l) {
  TensorComponents t;
  t.k = k;
  t.l = l;
  t.comp.assign(static_cast<size_t>(1) << (2 * (k + l)), 0.0);
  return t;
}

namespace {

size_t flat_index(const std::vector<int>& idx) {
  size_t f = 0;
  for (int i : idx) f = f * 4 + static_cast<size_t>(i);
  return f;
}

}  // namespace

double& TensorComponents::at(const std::vector<int>& idx) {
  return comp[flat_index(idx)];
}

double TensorComponents::at(const std::vector<int>& idx) const {
  return comp[flat_index(idx)];
}

TensorComponents transform_tensor(const TensorComponents& t, const Mat4& jac,
                                  const Mat4& jac_inv) {
  const Mat4 prod = mat4_mul(jac, jac_inv);
  if (mat4_max_abs_diff(prod, mat4_identity()) > 1e-10)
    throw BadJacobian(
        "transform_tensor: jacobian * inverse_jacobian is not the identity");
  const int n = t.rank();
  TensorComponents out = TensorComponents::zeros(t.k, t.l);
  if (n == 0) {
    out.comp = t.comp;
    return out;
  }
  std::vector<int> yi(n, 0), xi(n, 0);
  const size_t total = out.comp.size();
  for (size_t f = 0; f < total; ++f) {
    size_t rem = f;
    for (int s = n - 1; s >= 0; --s) {
      yi[s] = static_cast<int>(rem & 3);
      rem >>= 2;
    }
    double acc = 0.0;
    for (size_t q = 0; q < total; ++q) {
      size_t rem2 = q;
      for (int s = n - 1; s >= 0; --s) {
        xi[s] = static_cast<int>(rem2 & 3);
        rem2 >>= 2;
      }
      double w = 1.0;
      for (int s = 0; s < t.k; ++s) w *= jac[yi[s]][xi[s]];
      for (int s = t.k; s < n; ++s) w *= jac_inv[xi[s]][yi[s]];
      if (w != 0.0) acc += w * t.comp[q];
    }
    out.comp[f] = acc;
  }
  return out;
}

namespace {

TensorComponents contract_slot(const TensorComponents& t, int slot,
                               const Mat4& metric_block, bool to_covariant) {
  const int n = t.rank();
  if (slot < 0 || slot >= n) throw Error("index slot out of range");
  // Slot permutation: the moved index lands at the boundary of the two
  // blocks, which is position k-1 (raised) or k (lowered) in the new layout.
  TensorComponents out = TensorComponents::zeros(to_covariant ? t.k - 1 : t.k + 1,
                                                 to_covariant ? t.l + 1 : t.l - 1);
  const int new_pos = to_covariant ? out.k : out.k - 1;
  std::vector<int> yi(n, 0), xi(n, 0);
  const size_t total = out.comp.size();
  for (size_t f = 0; f < total; ++f) {
    size_t rem = f;
    for (int s = n - 1; s >= 0; --s) {
      yi[s] = static_cast<int>(rem & 3);
      rem >>= 2;
    }
    // Map new layout back to old: every slot except new_pos keeps its
    // relative order; new_pos corresponds to the old `slot`.
    double acc = 0.0;
    for (int c = 0; c < 4; ++c) {
      int src = 0;
      for (int s = 0; s < n; ++s) {
        if (s == slot) {
          xi[s] = c;
          continue;
        }
        if (src == new_pos) ++src;
        xi[s] = yi[src];
        ++src;
      }
      acc += metric_block[yi[new_pos]][c] * t.comp[flat_index(xi)];
    }
    out.comp[f] = acc;
  }
  return out;
}

}  // namespace

TensorComponents lower_index(const TensorComponents& t, int slot,
                             const MetricSpec& m, const Vec4& x) {
  if (slot >= t.k) throw Error("lower_index: slot is already covariant");
  return contract_slot(t, slot, m.value(x), true);
}

TensorComponents raise_index(const TensorComponents& t, int slot,
                             const MetricSpec& m, const Vec4& x) {
  if (slot < t.k) throw Error("raise_index: slot is already contravariant");
  return contract_slot(t, slot, inverse_metric(m, x), false);
}

}  // namespace nullshock::tensor

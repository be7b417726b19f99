#include "hopfluid/diffops.hpp"

#include <cmath>

namespace hopfluid {

namespace {

constexpr int kEps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                               {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                               {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};

}  // namespace

double fd_step(const Chart& chart, const Vec3& x, int axis, double h) {
  if (chart.domain[axis].half_infinite()) h *= std::max(1.0, std::abs(x[axis]));
  if (!chart.periodic[axis]) {
    Vec3 xp = x, xm = x;
    xp[axis] += h;
    xm[axis] -= h;
    if (!chart.contains(xp) || !chart.contains(xm))
      throw StepTooLargeError(chart.name + ": finite-difference stencil leaves the chart on " +
                              chart.coords[axis]);
  }
  return h;
}

Vec3 scalar_partials(const ScalarField& f, const Chart& chart, const Vec3& x) {
  if (f.partials) return f.partials(x);
  Vec3 d;
  for (int i = 0; i < 3; ++i) {
    const double h = fd_step(chart, x, i);
    Vec3 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    d[i] = (f.value(xp) - f.value(xm)) / (2 * h);
  }
  return d;
}

Mat3 vector_jacobian(const VectorFieldHandle& V, const Chart& chart, const Vec3& x) {
  if (V.jacobian) return V.jacobian(x);
  Mat3 J;
  for (int j = 0; j < 3; ++j) {
    const double h = fd_step(chart, x, j);
    Vec3 xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    J.col(j) = (V.components(xp) - V.components(xm)) / (2 * h);
  }
  return J;
}

Vec3 grad(const ScalarField& f, const MetricSpec& spec, const Chart& chart, const Vec3& x) {
  chart.require_interior(x);
  return metric_inverse_at(spec, chart, x) * scalar_partials(f, chart, x);
}

double divergence(const VectorFieldHandle& V, const MetricSpec& spec, const Chart& chart,
                  const Vec3& x) {
  chart.require_interior(x);
  const Mat3 J = vector_jacobian(V, chart, x);
  const Vec3 v = V.components(x);
  const Mat3 ginv = metric_inverse_at(spec, chart, x);
  double d = J.trace();
  // d_i ln sqrt(det g) = tr(g^{-1} d_i g) / 2
  for (int i = 0; i < 3; ++i)
    d += 0.5 * v[i] * (ginv * metric_partial_at(spec, chart, x, i)).trace();
  return d;
}

Vec3 curl(const VectorFieldHandle& V, const MetricSpec& spec, const Chart& chart, const Vec3& x) {
  chart.require_interior(x);
  const Mat3 g = metric_at(spec, chart, x);
  const Mat3 J = vector_jacobian(V, chart, x);
  const Vec3 v = V.components(x);
  // d_j (V-flat)_k = (d_j g) V + g d_j V
  Mat3 dflat;  // dflat(j,k) = d_j (gV)_k
  for (int j = 0; j < 3; ++j) {
    const Vec3 t = metric_partial_at(spec, chart, x, j) * v + g * J.col(j);
    dflat.row(j) = t.transpose();
  }
  const double sg = std::sqrt(g.determinant());
  Vec3 c = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (kEps[i][j][k] != 0) c[i] += kEps[i][j][k] * dflat(j, k);
  return chart.orientation / sg * c;
}

Vec3 hodge_dual_vector(const Mat3& two_form, const MetricSpec& spec, const Chart& chart,
                       const Vec3& x) {
  chart.require_interior(x);
  const double sg = volume_density(spec, chart, x);
  Vec3 v = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (kEps[i][j][k] != 0) v[i] += kEps[i][j][k] * two_form(j, k);
  return chart.orientation / (2 * sg) * v;
}

Vec3 cross(const MetricSpec& spec, const Chart& chart, const Vec3& x, const Vec3& A,
           const Vec3& B) {
  const double sg = volume_density(spec, chart, x);
  Vec3 flat = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (kEps[i][j][k] != 0) flat[k] += kEps[i][j][k] * A[i] * B[j];
  flat *= chart.orientation * sg;
  return metric_inverse_at(spec, chart, x) * flat;
}

double laplace_beltrami(const ScalarField& f, const MetricSpec& spec, const Chart& chart,
                        const Vec3& x) {
  chart.require_interior(x);
  auto flux = [&](const Vec3& y) -> Vec3 {
    return volume_density(spec, chart, y) * (metric_inverse_at(spec, chart, y) *
                                             scalar_partials(f, chart, y));
  };
  double d = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double h = fd_step(chart, x, i);
    Vec3 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    d += (flux(xp)[i] - flux(xm)[i]) / (2 * h);
  }
  return d / volume_density(spec, chart, x);
}

Vec3 covariant_derivative(const VectorFieldHandle& B, const Vec3& A, const MetricSpec& spec,
                          const Chart& chart, const Vec3& x) {
  const Mat3 J = vector_jacobian(B, chart, x);
  const Vec3 b = B.components(x);
  const Christoffel G = christoffel_at(spec, chart, x);
  Vec3 out = J * A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i] += G(i, j, k) * A[j] * b[k];
  return out;
}

}  // namespace hopfluid

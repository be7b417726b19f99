#ifndef HOPFLUID_METRIC_HPP
#define HOPFLUID_METRIC_HPP

#include <array>

#include "hopfluid/chart.hpp"

namespace hopfluid {

enum class MetricFamily {
  Euclidean3,
  CylinderR2xS1,       // dr^2 + r^2 dtheta^2 + dphi^2
  S3Round,             // ds^2 + cos^2 s dphi1^2 + sin^2 s dphi2^2
  S3Squashed,          // a^2[(k^2 sin^2 s + l^2 cos^2 s) ds^2 + k^2 cos^2 s dphi1^2 + l^2 sin^2 s dphi2^2]
  S3Conformal,         // a^2 k^2 l^2 / (k^2 sin^2 s + l^2 cos^2 s) * round
  S3WeightedSasakian,  // (1/sg)(ds^2 + sin^2 s cos^2 s (k dphi1 - l dphi2)^2 / sg^2) + (cos^2 s dphi1 + sin^2 s dphi2)^2 / sg^2
};

struct MetricSpec {
  MetricFamily family = MetricFamily::Euclidean3;
  int k = 1;
  int l = 1;
  double a = 1.0;

  static MetricSpec euclidean3() { return {MetricFamily::Euclidean3, 1, 1, 1.0}; }
  static MetricSpec cylinder() { return {MetricFamily::CylinderR2xS1, 1, 1, 1.0}; }
  static MetricSpec s3_round() { return {MetricFamily::S3Round, 1, 1, 1.0}; }
  static MetricSpec s3_squashed(int k, int l, double a) { return {MetricFamily::S3Squashed, k, l, a}; }
  static MetricSpec s3_conformal(int k, int l, double a) { return {MetricFamily::S3Conformal, k, l, a}; }
  static MetricSpec s3_weighted_sasakian(int k, int l) { return {MetricFamily::S3WeightedSasakian, k, l, 1.0}; }
};

/// Standard chart for a metric family (the box the construction lives on).
Chart chart_for(const MetricSpec& spec);

/// Cylindrical coordinates on R^3 (z unbounded, not periodic); same metric
/// components as CylinderR2xS1.
Chart cylindrical_r3_chart();

Mat3 metric_at(const MetricSpec& spec, const Chart& chart, const Vec3& x);
Mat3 metric_inverse_at(const MetricSpec& spec, const Chart& chart, const Vec3& x);

/// Closed-form coordinate partials of the metric, d_j g. All families depend on
/// the first coordinate only, so j != 0 returns zero.
Mat3 metric_partial_at(const MetricSpec& spec, const Chart& chart, const Vec3& x, int j);

double volume_density(const MetricSpec& spec, const Chart& chart, const Vec3& x);

struct Christoffel {
  // c[i][j][k] = Gamma^i_{jk}
  std::array<std::array<std::array<double, 3>, 3>, 3> c{};
  double operator()(int i, int j, int k) const { return c[i][j][k]; }
};

Christoffel christoffel_at(const MetricSpec& spec, const Chart& chart, const Vec3& x);

/// Finite-difference route (central differences of metric components); the
/// universal fallback and the oracle the closed forms are tested against.
Christoffel christoffel_fd(const MetricSpec& spec, const Chart& chart, const Vec3& x,
                           double h = 1e-5);

struct SourceGeometry {
  MetricSpec metric;
  Chart chart;
};

inline SourceGeometry geometry_for(const MetricSpec& spec) { return {spec, chart_for(spec)}; }

}  // namespace hopfluid

#endif

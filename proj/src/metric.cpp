#include "hopfluid/metric.hpp"

#include <cmath>

namespace hopfluid {

namespace {

double inf() { return std::numeric_limits<double>::infinity(); }

Chart s3_chart(const char* name) {
  Chart c;
  c.name = name;
  c.coords = {"s", "phi1", "phi2"};
  c.domain = {Interval{0.0, kPi / 2}, Interval{0.0, 2 * kPi}, Interval{0.0, 2 * kPi}};
  c.periodic = {false, true, true};
  c.orientation = -1.0;
  c.singular_loci = {{0, 0.0}, {0, kPi / 2}};
  return c;
}

}  // namespace

Chart chart_for(const MetricSpec& spec) {
  switch (spec.family) {
    case MetricFamily::Euclidean3: {
      Chart c;
      c.name = "euclidean3";
      c.coords = {"x", "y", "z"};
      c.domain = {Interval{-inf(), inf()}, Interval{-inf(), inf()}, Interval{-inf(), inf()}};
      return c;
    }
    case MetricFamily::CylinderR2xS1: {
      Chart c;
      c.name = "r2xs1";
      c.coords = {"r", "theta", "phi"};
      c.domain = {Interval{0.0, inf()}, Interval{0.0, 2 * kPi}, Interval{0.0, 2 * kPi}};
      c.periodic = {false, true, true};
      c.singular_loci = {{0, 0.0}};
      return c;
    }
    case MetricFamily::S3Round:
      return s3_chart("s3_round");
    case MetricFamily::S3Squashed:
      return s3_chart("s3_squashed");
    case MetricFamily::S3Conformal:
      return s3_chart("s3_conformal");
    case MetricFamily::S3WeightedSasakian:
      return s3_chart("s3_weighted_sasakian");
  }
  throw Error("unknown metric family");
}

Chart cylindrical_r3_chart() {
  Chart c;
  c.name = "cylindrical_r3";
  c.coords = {"rho", "theta", "z"};
  c.domain = {Interval{0.0, inf()}, Interval{0.0, 2 * kPi}, Interval{-inf(), inf()}};
  c.periodic = {false, true, false};
  c.singular_loci = {{0, 0.0}};
  return c;
}

Mat3 metric_at(const MetricSpec& spec, const Chart& chart, const Vec3& x) {
  chart.require_interior(x);
  const double s = x[0];
  const double k = spec.k, l = spec.l, a = spec.a;
  Mat3 g = Mat3::Zero();
  switch (spec.family) {
    case MetricFamily::Euclidean3:
      return Mat3::Identity();
    case MetricFamily::CylinderR2xS1:
      g.diagonal() << 1.0, s * s, 1.0;
      return g;
    case MetricFamily::S3Round: {
      const double c = std::cos(s), sn = std::sin(s);
      g.diagonal() << 1.0, c * c, sn * sn;
      return g;
    }
    case MetricFamily::S3Squashed: {
      const double c2 = std::cos(s) * std::cos(s), s2 = std::sin(s) * std::sin(s);
      const double Q = k * k * s2 + l * l * c2;
      g.diagonal() << a * a * Q, a * a * k * k * c2, a * a * l * l * s2;
      return g;
    }
    case MetricFamily::S3Conformal: {
      const double c2 = std::cos(s) * std::cos(s), s2 = std::sin(s) * std::sin(s);
      const double Q = k * k * s2 + l * l * c2;
      const double f = a * a * k * k * l * l / Q;
      g.diagonal() << f, f * c2, f * s2;
      return g;
    }
    case MetricFamily::S3WeightedSasakian: {
      const double c2 = std::cos(s) * std::cos(s), s2 = std::sin(s) * std::sin(s);
      const double sg = k * s2 + l * c2;
      const double A = s2 * c2 / (sg * sg * sg);  // (k dphi1 - l dphi2)^2 weight
      const double B = 1.0 / (sg * sg);           // (cos^2 s dphi1 + sin^2 s dphi2)^2 weight
      g(0, 0) = 1.0 / sg;
      g(1, 1) = A * k * k + B * c2 * c2;
      g(1, 2) = g(2, 1) = -A * k * l + B * c2 * s2;
      g(2, 2) = A * l * l + B * s2 * s2;
      return g;
    }
  }
  throw Error("unknown metric family");
}

Mat3 metric_inverse_at(const MetricSpec& spec, const Chart& chart, const Vec3& x) {
  return metric_at(spec, chart, x).inverse();
}

Mat3 metric_partial_at(const MetricSpec& spec, const Chart& chart, const Vec3& x, int j) {
  chart.require_interior(x);
  Mat3 d = Mat3::Zero();
  if (j != 0) return d;
  const double s = x[0];
  const double k = spec.k, l = spec.l, a = spec.a;
  const double sin2s = std::sin(2 * s), cos2s = std::cos(2 * s);
  switch (spec.family) {
    case MetricFamily::Euclidean3:
      return d;
    case MetricFamily::CylinderR2xS1:
      d(1, 1) = 2 * s;
      return d;
    case MetricFamily::S3Round:
      d(1, 1) = -sin2s;
      d(2, 2) = sin2s;
      return d;
    case MetricFamily::S3Squashed:
      d(0, 0) = a * a * (k * k - l * l) * sin2s;
      d(1, 1) = -a * a * k * k * sin2s;
      d(2, 2) = a * a * l * l * sin2s;
      return d;
    case MetricFamily::S3Conformal: {
      const double c2 = std::cos(s) * std::cos(s), s2 = std::sin(s) * std::sin(s);
      const double Q = k * k * s2 + l * l * c2;
      const double Qp = (k * k - l * l) * sin2s;
      const double f = a * a * k * k * l * l / Q;
      const double fp = -f * Qp / Q;
      d(0, 0) = fp;
      d(1, 1) = fp * c2 - f * sin2s;
      d(2, 2) = fp * s2 + f * sin2s;
      return d;
    }
    case MetricFamily::S3WeightedSasakian: {
      const double c2 = std::cos(s) * std::cos(s), s2 = std::sin(s) * std::sin(s);
      const double sg = k * s2 + l * c2;
      const double sgp = (k - l) * sin2s;
      const double p = s2 * c2;              // sin^2 s cos^2 s
      const double pp = 0.5 * std::sin(4 * s);
      const double A = p / (sg * sg * sg);
      const double Ap = pp / (sg * sg * sg) - 3 * p * sgp / (sg * sg * sg * sg);
      const double B = 1.0 / (sg * sg);
      const double Bp = -2 * sgp / (sg * sg * sg);
      d(0, 0) = -sgp / (sg * sg);
      d(1, 1) = Ap * k * k + Bp * c2 * c2 + B * (-2 * sin2s * c2);
      d(1, 2) = d(2, 1) = -Ap * k * l + Bp * p + B * pp;
      d(2, 2) = Ap * l * l + Bp * s2 * s2 + B * (2 * sin2s * s2);
      return d;
    }
  }
  throw Error("unknown metric family");
}

double volume_density(const MetricSpec& spec, const Chart& chart, const Vec3& x) {
  const double det = metric_at(spec, chart, x).determinant();
  if (!(det > 0)) throw SingularPointError(chart.name + ": metric not positive definite here");
  return std::sqrt(det);
}

namespace {

Christoffel christoffel_from_partials(const Mat3& ginv, const std::array<Mat3, 3>& dg) {
  Christoffel G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double sum = 0.0;
        for (int m = 0; m < 3; ++m)
          sum += ginv(i, m) * (dg[j](m, k) + dg[k](m, j) - dg[m](j, k));
        G.c[i][j][k] = 0.5 * sum;
      }
  return G;
}

}  // namespace

Christoffel christoffel_at(const MetricSpec& spec, const Chart& chart, const Vec3& x) {
  const Mat3 ginv = metric_inverse_at(spec, chart, x);
  std::array<Mat3, 3> dg = {metric_partial_at(spec, chart, x, 0),
                            metric_partial_at(spec, chart, x, 1),
                            metric_partial_at(spec, chart, x, 2)};
  return christoffel_from_partials(ginv, dg);
}

Christoffel christoffel_fd(const MetricSpec& spec, const Chart& chart, const Vec3& x, double h) {
  const Mat3 ginv = metric_inverse_at(spec, chart, x);
  std::array<Mat3, 3> dg;
  for (int j = 0; j < 3; ++j) {
    Vec3 xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    if (!chart.contains(xp) || !chart.contains(xm))
      throw StepTooLargeError(chart.name + ": christoffel stencil leaves the chart");
    dg[j] = (metric_at(spec, chart, xp) - metric_at(spec, chart, xm)) / (2 * h);
  }
  return christoffel_from_partials(ginv, dg);
}

}  // namespace hopfluid

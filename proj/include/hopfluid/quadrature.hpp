#ifndef HOPFLUID_QUADRATURE_HPP
#define HOPFLUID_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "hopfluid/metric.hpp"

namespace hopfluid {

enum class RuleKind {
  Gauss,             // Gauss-Legendre on a finite interval (open: never hits endpoints)
  PeriodicTrapezoid, // equispaced rule on a full period
  GaussTanHalfLine,  // r = tan(u) transform of [0,inf), Gauss in u on [0, pi/2)
  GaussTanFullLine,  // x = tan(u) transform of (-inf,inf)
};

struct AxisRule {
  RuleKind kind = RuleKind::Gauss;
  int order = 48;
};

struct QuadratureSpec {
  std::array<AxisRule, 3> axes;
  int richardson_levels = 2;  // successive order doublings; error = last difference
};

/// Gauss in non-periodic coordinates (tan-transformed on half-infinite axes),
/// trapezoid in periodic ones.
QuadratureSpec default_quadrature(const Chart& chart, int base_order = 48,
                                  int periodic_order = 16);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Nodes/weights of an n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

/// Deterministic pairwise summation (order-independent of thread count).
double pairwise_sum(std::span<const double> v);

/// Integral of `density` against the Riemannian volume measure of (spec, chart).
QuadratureResult integrate(const std::function<double(const Vec3&)>& density,
                           const MetricSpec& spec, const Chart& chart,
                           const QuadratureSpec& q);

/// Integral against the plain coordinate measure dx0 dx1 dx2 (tail transform still applied).
QuadratureResult integrate_box(const std::function<double(const Vec3&)>& integrand,
                               const Chart& chart, const QuadratureSpec& q);

/// One-dimensional Gauss integral on [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b, int order = 64);

/// Cumulative integral of uniformly sampled values (Simpson-based, O(h^4));
/// out[i] = integral from grid start to node i.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h);

}  // namespace hopfluid

#endif

#include "hopfluid/quadrature.hpp"

#include <cmath>

namespace hopfluid {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double t : v) s += t;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

QuadratureSpec default_quadrature(const Chart& chart, int base_order, int periodic_order) {
  QuadratureSpec q;
  for (int i = 0; i < 3; ++i) {
    if (chart.periodic[i])
      q.axes[i] = {RuleKind::PeriodicTrapezoid, periodic_order};
    else if (std::isinf(chart.domain[i].lo) && chart.domain[i].half_infinite())
      q.axes[i] = {RuleKind::GaussTanFullLine, base_order};
    else if (chart.domain[i].half_infinite())
      q.axes[i] = {RuleKind::GaussTanHalfLine, base_order};
    else
      q.axes[i] = {RuleKind::Gauss, base_order};
  }
  return q;
}

namespace {

struct Axis1D {
  std::vector<double> nodes;    // coordinate values
  std::vector<double> weights;  // include any transform jacobian
};

Axis1D build_axis(const AxisRule& rule, const Interval& dom) {
  Axis1D a;
  switch (rule.kind) {
    case RuleKind::Gauss: {
      std::vector<double> x, w;
      gauss_legendre(rule.order, x, w);
      const double mid = 0.5 * (dom.lo + dom.hi), half = 0.5 * (dom.hi - dom.lo);
      for (int i = 0; i < rule.order; ++i) {
        a.nodes.push_back(mid + half * x[i]);
        a.weights.push_back(half * w[i]);
      }
      return a;
    }
    case RuleKind::PeriodicTrapezoid: {
      const double period = dom.hi - dom.lo;
      const double h = period / rule.order;
      for (int i = 0; i < rule.order; ++i) {
        a.nodes.push_back(dom.lo + (i + 0.5) * h);
        a.weights.push_back(h);
      }
      return a;
    }
    case RuleKind::GaussTanHalfLine: {
      std::vector<double> x, w;
      gauss_legendre(rule.order, x, w);
      const double half = kPi / 4;  // u in [0, pi/2)
      for (int i = 0; i < rule.order; ++i) {
        const double u = half + half * x[i];
        const double c = std::cos(u);
        a.nodes.push_back(dom.lo + std::tan(u));
        a.weights.push_back(half * w[i] / (c * c));
      }
      return a;
    }
    case RuleKind::GaussTanFullLine: {
      std::vector<double> x, w;
      gauss_legendre(rule.order, x, w);
      const double half = kPi / 2;  // u in (-pi/2, pi/2)
      for (int i = 0; i < rule.order; ++i) {
        const double u = half * x[i];
        const double c = std::cos(u);
        a.nodes.push_back(std::tan(u));
        a.weights.push_back(half * w[i] / (c * c));
      }
      return a;
    }
  }
  throw Error("unknown quadrature rule");
}

double tensor_pass(const std::function<double(const Vec3&)>& f, const Chart& chart,
                   const QuadratureSpec& q, int level) {
  std::array<Axis1D, 3> axes;
  for (int i = 0; i < 3; ++i) {
    AxisRule r = q.axes[i];
    r.order <<= level;
    axes[i] = build_axis(r, chart.domain[i]);
  }
  std::vector<double> terms;
  terms.reserve(axes[0].nodes.size() * axes[1].nodes.size() * axes[2].nodes.size());
  Vec3 x;
  for (std::size_t i = 0; i < axes[0].nodes.size(); ++i) {
    x[0] = axes[0].nodes[i];
    for (std::size_t j = 0; j < axes[1].nodes.size(); ++j) {
      x[1] = axes[1].nodes[j];
      for (std::size_t k = 0; k < axes[2].nodes.size(); ++k) {
        x[2] = axes[2].nodes[k];
        terms.push_back(f(x) * axes[0].weights[i] * axes[1].weights[j] * axes[2].weights[k]);
      }
    }
  }
  return pairwise_sum(terms);
}

QuadratureResult refine(const std::function<double(const Vec3&)>& f, const Chart& chart,
                        const QuadratureSpec& q) {
  const int levels = std::max(2, q.richardson_levels);
  double prev = tensor_pass(f, chart, q, 0);
  double cur = prev, err = 0.0;
  for (int L = 1; L < levels; ++L) {
    cur = tensor_pass(f, chart, q, L);
    const double diff = std::abs(cur - prev);
    if (diff > 0.10 * std::max({std::abs(cur), std::abs(prev), 1e-300}) && diff > 1e-10)
      throw QuadratureDivergenceError(chart.name + ": refinement does not settle (improper tail?)");
    err = diff;
    prev = cur;
  }
  return {cur, err};
}

}  // namespace

QuadratureResult integrate(const std::function<double(const Vec3&)>& density,
                           const MetricSpec& spec, const Chart& chart, const QuadratureSpec& q) {
  auto f = [&](const Vec3& x) { return density(x) * volume_density(spec, chart, x); };
  return refine(f, chart, q);
}

QuadratureResult integrate_box(const std::function<double(const Vec3&)>& integrand,
                               const Chart& chart, const QuadratureSpec& q) {
  return refine(integrand, chart, q);
}

double integrate_1d(const std::function<double(double)>& f, double a, double b, int order) {
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<double> terms(order);
  for (int i = 0; i < order; ++i) terms[i] = half * w[i] * f(mid + half * x[i]);
  return pairwise_sum(terms);
}

std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n == 2) {
    out[1] = 0.5 * h * (f[0] + f[1]);
    return out;
  }
  if (n == 3) {
    out[1] = h / 12.0 * (5 * f[0] + 8 * f[1] - f[2]);
    out[2] = out[1] + h / 12.0 * (-f[0] + 8 * f[1] + 5 * f[2]);
    return out;
  }
  // Simpson pairs at even indices; cubic end-panel formulas at odd ones.
  out[1] = h / 24.0 * (9 * f[0] + 19 * f[1] - 5 * f[2] + f[3]);
  for (std::size_t i = 2; i < n; ++i) {
    if (i % 2 == 0)
      out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4 * f[i - 1] + f[i]);
    else
      out[i] = out[i - 1] + h / 24.0 * (f[i - 3] - 5 * f[i - 2] + 19 * f[i - 1] + 9 * f[i]);
  }
  return out;
}

}  // namespace hopfluid

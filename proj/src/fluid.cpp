#include "hopfluid/fluid.hpp"

#include <cmath>

#include "hopfluid/quadrature.hpp"

namespace hopfluid {

FlowField dual_flow(const AnsatzMap& map, const Potential& pot) {
  FlowField flow;
  flow.source = map.source;
  flow.provenance = "dual_flow(" + map.name + "," + pot.tag() + ")";

  const auto geo = map.source;
  flow.velocity.components = [map, geo](const Vec3& x) -> Vec3 {
    if (map.family == AnsatzFamily::Constant) return Vec3::Zero();
    const Mat3 w = map.pullback_area(x, /*unit_normalized=*/false);
    return hodge_dual_vector(w, geo.metric, geo.chart, x);
  };
  if (map.profile_based()) {
    // V = c(x0) (0, m2, -m1) with c = orient * R^2 a' sin a / sqrt(det g);
    // the s-derivative is closed through a'' and the metric partials.
    flow.velocity.jacobian = [map, geo](const Vec3& x) -> Mat3 {
      const double R2 = map.target_radius * map.target_radius;
      const double a = map.profile(x[0]);
      const double ap = map.profile.d1(x[0]), app = map.profile.d2(x[0]);
      const Mat3 G = metric_at(geo.metric, geo.chart, x);
      const Mat3 dG = metric_partial_at(geo.metric, geo.chart, x, 0);
      const double det = G.determinant();
      const double sg = std::sqrt(det);
      const double dlnsg = 0.5 * (G.inverse() * dG).trace();
      const double w = ap * std::sin(a);
      const double wp = app * std::sin(a) + ap * ap * std::cos(a);
      const double c = geo.chart.orientation * R2 / sg;
      Mat3 J = Mat3::Zero();
      const Vec3 dir(0.0, map.m2, -map.m1);
      J.col(0) = c * (wp - w * dlnsg) * dir;
      return J;
    };
  }

  flow.bernoulli = potential_pullback_field(map, pot);
  const ScalarField s2 = sigma2_field(map);
  const ScalarField P = flow.bernoulli;
  flow.pressure.value = [P, s2](const Vec3& x) { return P.value(x) - 0.5 * s2.value(x); };
  if (P.partials && s2.partials) {
    flow.pressure.partials = [P, s2](const Vec3& x) -> Vec3 {
      return P.partials(x) - 0.5 * s2.partials(x);
    };
  }
  return flow;
}

EulerCurlDefect euler_residual_curl_form(const FlowField& flow, const Vec3& x) {
  const auto& geo = flow.source;
  geo.chart.require_interior(x);
  const Vec3 v = flow.velocity.components(x);
  const Vec3 c = curl(flow.velocity, geo.metric, geo.chart, x);
  const Vec3 gP = grad(flow.bernoulli, geo.metric, geo.chart, x);
  EulerCurlDefect d;
  d.momentum_defect = cross(geo.metric, geo.chart, x, v, c) - gP;
  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  d.momentum_norm = std::sqrt(d.momentum_defect.dot(G * d.momentum_defect));
  d.div_defect = divergence(flow.velocity, geo.metric, geo.chart, x);
  return d;
}

Vec3 euler_residual_convective_form(const FlowField& flow, const Vec3& x) {
  const auto& geo = flow.source;
  geo.chart.require_interior(x);
  const Vec3 v = flow.velocity.components(x);
  const Vec3 adv = covariant_derivative(flow.velocity, v, geo.metric, geo.chart, x);
  const Vec3 gp = grad(flow.pressure, geo.metric, geo.chart, x);
  return adv + gp;
}

FlowField khesin_flow(std::function<double(double)> f_minus, std::function<double(double)> f_plus,
                      std::function<double(double)> df_minus,
                      std::function<double(double)> df_plus) {
  FlowField flow;
  flow.source = geometry_for(MetricSpec::s3_round());
  flow.provenance = "khesin";

  auto t_of = [](double s) { return std::cos(s) * std::cos(s); };
  flow.velocity.components = [f_minus, f_plus, t_of](const Vec3& x) -> Vec3 {
    const double t = t_of(x[0]);
    const double fm = f_minus(t), fp = f_plus(t);
    return {0.0, fm + fp, fp - fm};
  };
  if (df_minus && df_plus) {
    flow.velocity.jacobian = [df_minus, df_plus, t_of](const Vec3& x) -> Mat3 {
      const double t = t_of(x[0]);
      const double tp = -std::sin(2 * x[0]);
      Mat3 J = Mat3::Zero();
      J(1, 0) = (df_minus(t) + df_plus(t)) * tp;
      J(2, 0) = (df_plus(t) - df_minus(t)) * tp;
      return J;
    };
  }

  auto pressure_of_t = [f_minus, f_plus](double t) {
    return 2.0 * integrate_1d([&](double u) { return f_minus(u) * f_plus(u); }, 0.0, t, 48);
  };
  auto vnorm2 = [f_minus, f_plus, t_of](const Vec3& x) {
    const double t = t_of(x[0]);
    const double v1 = f_minus(t) + f_plus(t), v2 = f_plus(t) - f_minus(t);
    const double c2 = std::cos(x[0]) * std::cos(x[0]), s2 = std::sin(x[0]) * std::sin(x[0]);
    return v1 * v1 * c2 + v2 * v2 * s2;
  };
  flow.pressure.value = [pressure_of_t, t_of](const Vec3& x) { return pressure_of_t(t_of(x[0])); };
  flow.bernoulli.value = [pressure_of_t, t_of, vnorm2](const Vec3& x) {
    return pressure_of_t(t_of(x[0])) + 0.5 * vnorm2(x);
  };
  flow.pressure.partials = [f_minus, f_plus, t_of](const Vec3& x) -> Vec3 {
    const double t = t_of(x[0]);
    return {2.0 * f_minus(t) * f_plus(t) * -std::sin(2 * x[0]), 0.0, 0.0};
  };
  if (df_minus && df_plus) {
    flow.bernoulli.partials = [f_minus, f_plus, df_minus, df_plus, t_of](const Vec3& x) -> Vec3 {
      const double s = x[0], t = t_of(s);
      const double tp = -std::sin(2 * s);
      const double fm = f_minus(t), fp = f_plus(t);
      const double v1 = fm + fp, v2 = fp - fm;
      const double v1p = (df_minus(t) + df_plus(t)) * tp, v2p = (df_plus(t) - df_minus(t)) * tp;
      const double c2 = std::cos(s) * std::cos(s), s2 = std::sin(s) * std::sin(s);
      const double dn = 2 * v1 * v1p * c2 - v1 * v1 * std::sin(2 * s) + 2 * v2 * v2p * s2 +
                        v2 * v2 * std::sin(2 * s);
      return {2.0 * fm * fp * tp + 0.5 * dn, 0.0, 0.0};
    };
  }
  return flow;
}

BeltramiReport beltrami_classify(const VectorFieldHandle& V, const MetricSpec& spec,
                                 const Chart& chart, const std::vector<Vec3>& samples) {
  BeltramiReport rep;
  double vscale = 0.0, cscale = 0.0;
  std::vector<double> fs;
  for (const Vec3& x : samples) {
    const Mat3 G = metric_at(spec, chart, x);
    const Vec3 v = V.components(x);
    const Vec3 c = curl(V, spec, chart, x);
    const double nv = std::sqrt(v.dot(G * v)), nc = std::sqrt(c.dot(G * c));
    vscale = std::max(vscale, nv);
    cscale = std::max(cscale, nc);
    rep.max_div = std::max(rep.max_div, std::abs(divergence(V, spec, chart, x)));
    if (nv > 1e-14 && nc > 1e-14) {
      const double cosang = std::clamp(v.dot(G * c) / (nv * nc), -1.0, 1.0);
      rep.max_angle_defect = std::max(rep.max_angle_defect, std::acos(std::abs(cosang)));
    }
    const double f = (nv > 1e-14) ? v.dot(G * c) / v.dot(G * v) : 0.0;
    fs.push_back(f);
    rep.proportionality_samples.emplace_back(x, f);
  }
  if (rep.max_div > 1e-6) {
    rep.kind = BeltramiKind::NotBeltrami;
    rep.note = "divergence exceeds 1e-6";
    return rep;
  }
  if (cscale <= 1e-8 * std::max(1.0, vscale)) {
    rep.kind = BeltramiKind::Potential;
    return rep;
  }
  if (rep.max_angle_defect > 1e-6) {
    rep.kind = BeltramiKind::NotBeltrami;
    rep.note = "curl not collinear with the field";
    return rep;
  }
  double mean = 0.0;
  for (double f : fs) mean += f;
  mean /= fs.size();
  double var = 0.0;
  for (double f : fs) var += (f - mean) * (f - mean);
  const double sd = std::sqrt(var / fs.size());
  if (sd <= 1e-8 * std::abs(mean)) {
    rep.kind = BeltramiKind::Linear;
    rep.linear_constant = mean;
  } else {
    rep.kind = BeltramiKind::Nonlinear;
  }
  return rep;
}

double measured_beltrami_constant(const VectorFieldHandle& V, const MetricSpec& spec,
                                  const Chart& chart, const std::vector<Vec3>& samples) {
  const BeltramiReport rep = beltrami_classify(V, spec, chart, samples);
  if (rep.kind != BeltramiKind::Linear)
    throw Error("field is not a linear Beltrami field; cannot read off the constant");
  return rep.linear_constant;
}

ForcedEulerResult forced_euler_check(const AnsatzMap& map, const Potential& pot, double kappa,
                                     const Vec3& x) {
  const auto& geo = map.source;
  geo.chart.require_interior(x);
  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  const Mat3 Gi = G.inverse();
  const Christoffel Gm = christoffel_at(geo.metric, geo.chart, x);

  // (div phi^*h)_k with finite-difference tensor derivatives
  auto S = [&](const Vec3& y) { return Mat3(map.pullback_metric(y)); };
  Vec3 divC = Vec3::Zero();
  {
    const Mat3 S0 = S(x);
    std::array<Mat3, 3> dS;
    for (int i = 0; i < 3; ++i) {
      const double h = fd_step(geo.chart, x, i);
      Vec3 xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      dS[i] = (S(xp) - S(xm)) / (2 * h);
    }
    for (int k = 0; k < 3; ++k) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double term = dS[i](j, k);
          for (int l = 0; l < 3; ++l) term -= Gm(l, i, j) * S0(l, k) + Gm(l, i, k) * S0(j, l);
          acc += Gi(i, j) * term;
        }
      divC[k] = acc;
    }
  }
  const Vec3 ds1 = scalar_partials(sigma1_field(map), geo.chart, x);
  const Vec3 Fflat = kappa * (divC - 0.5 * ds1);

  ForcedEulerResult out;
  out.force = Gi * Fflat;
  const FlowField flow = dual_flow(map, pot);
  const Vec3 v = flow.velocity.components(x);
  out.defect = euler_residual_convective_form(flow, x) - out.force;
  out.v_orthogonality = Fflat.dot(v);
  return out;
}

std::string to_string(BeltramiKind kind) {
  switch (kind) {
    case BeltramiKind::Potential:
      return "potential";
    case BeltramiKind::Linear:
      return "linear";
    case BeltramiKind::Nonlinear:
      return "nonlinear";
    case BeltramiKind::NotBeltrami:
      return "not_beltrami";
  }
  return "unknown";
}

}  // namespace hopfluid

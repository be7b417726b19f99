#include "hopfluid/variational.hpp"

#include <cmath>

#include "hopfluid/parallel.hpp"

namespace hopfluid {

namespace {

QuadratureSpec energy_quadrature(const AnsatzMap& map) {
  return default_quadrature(map.source.chart);
}

Vec3 grad_field(const ScalarField& f, const AnsatzMap& map, const Vec3& x) {
  return grad(f, map.source.metric, map.source.chart, x);
}

}  // namespace

EnergyBreakdown energy(const AnsatzMap& map, const Potential& pot, double kappa,
                       const QuadratureSpec& q) {
  const auto& geo = map.source;
  const double R = map.target_radius;
  auto s2 = [&](const Vec3& x) { return sigma2_density(map, x); };
  auto s1 = [&](const Vec3& x) { return sigma1_density(map, x); };
  auto pv = [&](const Vec3& x) { return pot.value(map.evaluate(x), R); };

  EnergyBreakdown e;
  e.kappa = kappa;
  const QuadratureResult rs2 = integrate(s2, geo.metric, geo.chart, q);
  const QuadratureResult rp = integrate(pv, geo.metric, geo.chart, q);
  e.sigma2_term = 0.5 * rs2.value;
  e.potential_term = rp.value;  // (1/2) * 2 * int Pbar
  e.quadrature_error_estimate = 0.5 * rs2.error_estimate + rp.error_estimate;
  if (kappa != 0.0) {
    const QuadratureResult rd = integrate(s1, geo.metric, geo.chart, q);
    e.dirichlet_term = 0.5 * rd.value;
    e.quadrature_error_estimate += std::abs(kappa) * 0.5 * rd.error_estimate;
  }
  e.total = kappa * e.dirichlet_term + e.sigma2_term + e.potential_term;
  return e;
}

EnergyBreakdown energy(const AnsatzMap& map, const Potential& pot, double kappa) {
  return energy(map, pot, kappa, energy_quadrature(map));
}

double flow_kinetic_energy(const AnsatzMap& map, const QuadratureSpec& q) {
  auto s2 = [&](const Vec3& x) { return sigma2_density(map, x); };
  return integrate(s2, map.source.metric, map.source.chart, q).value;
}

ELResidual el_residual(const AnsatzMap& map, const Potential& pot, const Vec3& x) {
  const auto& geo = map.source;
  geo.chart.require_interior(x);
  const double s2 = sigma2_density(map, x);
  if (s2 < 1e-12) throw RankDeficientError(map.name + ": critical point; use critical_point_check");

  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  const Vec3 U = vertical_unit(map, x);
  const Vec3 mu = fiber_mean_curvature(map, x);
  const Vec3 gs2 = grad_field(sigma2_field(map), map, x);
  const Vec3 gs2_h = gs2 - U.dot(G * gs2) * U;
  const Vec3 gP = grad_field(potential_pullback_field(map, pot), map, x);

  ELResidual r;
  // sigma2 * grad^H ln|l1 l2| = grad^H(sigma2)/2, so the multiplied-out form is
  // regular wherever sigma2 is.
  r.vector_residual = s2 * mu - 0.5 * gs2_h + gP;
  r.norm = std::sqrt(r.vector_residual.dot(G * r.vector_residual));
  return r;
}

double el_residual_sup(const AnsatzMap& map, const Potential& pot, int n, double margin,
                       double box_cap) {
  const Chart& chart = map.source.chart;
  std::array<std::vector<double>, 3> nodes;
  for (int axis = 0; axis < 3; ++axis) {
    double lo = chart.domain[axis].lo, hi = chart.domain[axis].hi;
    if (chart.domain[axis].half_infinite()) hi = box_cap;
    if (std::isinf(lo)) lo = -box_cap;
    if (!chart.periodic[axis]) {
      lo += margin;
      hi -= margin;
    }
    for (int i = 0; i < n; ++i) nodes[axis].push_back(lo + (hi - lo) * (i + 0.5) / n);
  }
  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  std::vector<double> norms(total, 0.0);
  parallel_for(total, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const int i = static_cast<int>(idx / (n * n));
      const int j = static_cast<int>((idx / n) % n);
      const int k = static_cast<int>(idx % n);
      const Vec3 x(nodes[0][i], nodes[1][j], nodes[2][k]);
      try {
        norms[idx] = el_residual(map, pot, x).norm;
      } catch (const RankDeficientError&) {
        norms[idx] = 0.0;  // critical points are checked separately
      }
    }
  });
  double sup = 0.0;
  for (double v : norms) sup = std::max(sup, v);
  return sup;
}

Vec3 tension_sigma2(const AnsatzMap& map, const Vec3& x) {
  const auto& geo = map.source;
  const StrainSpectrum sp = strain_spectrum(map, x);
  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  const Vec3 mu = fiber_mean_curvature(map, x);
  const Vec3 gs2 = grad_field(sigma2_field(map), map, x);
  const Vec3 U = sp.U;
  const Vec3 gs2_h = gs2 - U.dot(G * gs2) * U;
  // T = mu - grad^H ln|l1 l2| = mu - grad^H(sigma2) / (2 sigma2)
  const Vec3 T = mu - gs2_h / (2.0 * sp.sigma2);
  const Vec3 arg = sp.lambda2_sq * T.dot(G * sp.E1) * sp.E1 +
                   sp.lambda1_sq * T.dot(G * sp.E2) * sp.E2;
  return -push_forward(map, x, arg);
}

Mat3 stress_tensor_sigma2(const AnsatzMap& map, const Vec3& x) {
  const auto& geo = map.source;
  const double s2 = sigma2_density(map, x);
  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  const Vec3 U = vertical_unit(map, x);
  const Vec3 Uflat = G * U;
  // g^V - g^H = 2 U-flat (x) U-flat - g
  return 0.5 * s2 * (2.0 * Uflat * Uflat.transpose() - G);
}

namespace {

// (div S)_k = g^{ij} (d_i S_jk - Gamma^l_{ij} S_lk - Gamma^l_{ik} S_jl),
// with d_i S by central differences.
Vec3 tensor_divergence_fd(const std::function<Mat3(const Vec3&)>& S, const MetricSpec& spec,
                          const Chart& chart, const Vec3& x) {
  const Mat3 Gi = metric_inverse_at(spec, chart, x);
  const Christoffel Gm = christoffel_at(spec, chart, x);
  const Mat3 S0 = S(x);
  std::array<Mat3, 3> dS;
  for (int i = 0; i < 3; ++i) {
    const double h = fd_step(chart, x, i);
    Vec3 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    dS[i] = (S(xp) - S(xm)) / (2 * h);
  }
  Vec3 div = Vec3::Zero();
  for (int k = 0; k < 3; ++k) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double term = dS[i](j, k);
        for (int l = 0; l < 3; ++l) term -= Gm(l, i, j) * S0(l, k) + Gm(l, i, k) * S0(j, l);
        acc += Gi(i, j) * term;
      }
    div[k] = acc;
  }
  return div;
}

}  // namespace

double stress_divergence_identity_check(const AnsatzMap& map, const Potential& pot,
                                        const Vec3& x) {
  (void)pot;  // the identity is potential-free; kept in the signature for symmetry
  const auto& geo = map.source;
  geo.chart.require_interior(x);
  const Vec3 tau = tension_sigma2(map, x);
  const Mat3 D = map.differential(x);
  auto S = [&](const Vec3& y) { return stress_tensor_sigma2(map, y); };
  const Vec3 divS = tensor_divergence_fd(S, geo.metric, geo.chart, x);
  double defect = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double lhs = tau.dot(D.col(k));  // h(tau, d phi(e_k)), ambient inner product
    defect = std::max(defect, std::abs(lhs + divS[k]));
  }
  return defect;
}

bool critical_point_check(const AnsatzMap& map, const Potential& pot, const Vec3& x_critical) {
  const auto& geo = map.source;
  // locate the nearest singular locus along coordinate 0
  double pole = x_critical[0];
  double best = std::numeric_limits<double>::infinity();
  for (const auto& loc : geo.chart.singular_loci) {
    const double d = std::abs(x_critical[loc.axis] - loc.value);
    if (loc.axis == 0 && d < best) {
      best = d;
      pole = loc.value;
    }
  }
  const double into = (pole <= geo.chart.domain[0].lo + 1e-12) ? 1.0 : -1.0;
  const ScalarField P = potential_pullback_field(map, pot);
  std::vector<double> qs;
  for (double eps : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
    Vec3 x = x_critical;
    x[0] = pole + into * eps;
    const Vec3 g = grad(P, geo.metric, geo.chart, x);
    const Mat3 G = metric_at(geo.metric, geo.chart, x);
    qs.push_back(std::sqrt(g.dot(G * g)));
  }
  return qs.back() <= 1e-8 || qs.back() <= 0.1 * qs.front();
}

std::vector<DerrickSample> derrick_scan(const AnsatzMap& map, const Potential& pot,
                                        const std::vector<double>& lambdas,
                                        const QuadratureSpec& q) {
  const auto& geo = map.source;
  const bool flat = geo.metric.family == MetricFamily::Euclidean3 ||
                    (geo.metric.family == MetricFamily::CylinderR2xS1 &&
                     !geo.chart.periodic[2]);
  if (!flat) throw Error("derrick_scan needs an R^3 chart");

  auto dilated = [&](double lam) {
    AnsatzMap m = map;
    if (map.family == AnsatzFamily::Axisymmetric) {
      auto base = map.axi;
      AxisymmetricData d;
      d.theta = [base, lam](double r, double z) { return base->theta(lam * r, lam * z); };
      d.theta_rho = [base, lam](double r, double z) { return lam * base->theta_rho(lam * r, lam * z); };
      d.theta_z = [base, lam](double r, double z) { return lam * base->theta_z(lam * r, lam * z); };
      d.psi = [base, lam](double r, double z) { return base->psi(lam * r, lam * z); };
      d.psi_rho = [base, lam](double r, double z) { return lam * base->psi_rho(lam * r, lam * z); };
      d.psi_z = [base, lam](double r, double z) { return lam * base->psi_z(lam * r, lam * z); };
      m.axi = std::make_shared<AxisymmetricData>(std::move(d));
    } else {
      throw Error("derrick_scan supports axisymmetric test configurations");
    }
    return m;
  };

  EnergyBreakdown base = energy(map, pot, 0.0, q);
  std::vector<DerrickSample> out;
  for (double lam : lambdas) {
    DerrickSample s;
    s.lambda = lam;
    const EnergyBreakdown e = lam == 1.0 ? base : energy(dilated(lam), pot, 0.0, q);
    s.sigma2_term = e.sigma2_term;
    s.potential_term = e.potential_term;
    s.total = e.total;
    s.predicted_total = lam * base.sigma2_term + base.potential_term / (lam * lam * lam);
    out.push_back(s);
  }
  return out;
}

}  // namespace hopfluid

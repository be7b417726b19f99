#include "hopfluid/ansatz.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace hopfluid {

namespace {

constexpr double kRankTol = 1e-12;

Vec3 sphere_point(double radius, double alpha, double phase) {
  return radius * Vec3(std::sin(alpha) * std::cos(phase), std::sin(alpha) * std::sin(phase),
                       std::cos(alpha));
}

}  // namespace

Vec3 AnsatzMap::evaluate(const Vec3& x) const {
  if (!source.chart.contains(x)) throw OutOfDomainError(name + ": point outside chart box");
  switch (family) {
    case AnsatzFamily::Constant:
      return constant_point;
    case AnsatzFamily::AlphaHopf:
    case AnsatzFamily::CylinderWinding:
      return sphere_point(target_radius, profile(x[0]), m1 * x[1] + m2 * x[2]);
    case AnsatzFamily::Axisymmetric: {
      const double rho = x[0], th = x[1], z = x[2];
      return sphere_point(target_radius, axi->theta(rho, z), l * th - k * axi->psi(rho, z));
    }
  }
  throw Error("unknown ansatz family");
}

Mat3 AnsatzMap::differential(const Vec3& x) const {
  if (!source.chart.contains(x)) throw OutOfDomainError(name + ": point outside chart box");
  Mat3 D = Mat3::Zero();
  const double R = target_radius;
  switch (family) {
    case AnsatzFamily::Constant:
      return D;
    case AnsatzFamily::AlphaHopf:
    case AnsatzFamily::CylinderWinding: {
      const double a = profile(x[0]), ap = profile.d1(x[0]);
      const double ps = m1 * x[1] + m2 * x[2];
      const double sa = std::sin(a), ca = std::cos(a), cp = std::cos(ps), sp = std::sin(ps);
      D.col(0) = R * Vec3(ap * ca * cp, ap * ca * sp, -ap * sa);
      const Vec3 dphase = R * Vec3(-sa * sp, sa * cp, 0.0);
      D.col(1) = m1 * dphase;
      D.col(2) = m2 * dphase;
      return D;
    }
    case AnsatzFamily::Axisymmetric: {
      const double rho = x[0], z = x[2];
      const double T = axi->theta(rho, z);
      const double ps = l * x[1] - k * axi->psi(rho, z);
      const double sa = std::sin(T), ca = std::cos(T), cp = std::cos(ps), sp = std::sin(ps);
      const Vec3 dT = R * Vec3(ca * cp, ca * sp, -sa);
      const Vec3 dP = R * Vec3(-sa * sp, sa * cp, 0.0);
      D.col(0) = axi->theta_rho(rho, z) * dT - k * axi->psi_rho(rho, z) * dP;
      D.col(1) = l * dP;
      D.col(2) = axi->theta_z(rho, z) * dT - k * axi->psi_z(rho, z) * dP;
      return D;
    }
  }
  throw Error("unknown ansatz family");
}

Mat3 AnsatzMap::pullback_metric(const Vec3& x) const {
  const Mat3 D = differential(x);
  return D.transpose() * D;
}

Mat3 AnsatzMap::pullback_area(const Vec3& x, bool unit_normalized) const {
  const Mat3 D = differential(x);
  const Vec3 y = evaluate(x);
  const double R = target_radius;
  const double scale = unit_normalized ? 1.0 / (R * R * R) : 1.0 / R;
  Mat3 w = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double v = scale * y.dot(D.col(i).cross(D.col(j)));
      w(i, j) = v;
      w(j, i) = -v;
    }
  return w;
}

Vec3 AnsatzMap::vertical_direction(const Vec3& x) const {
  switch (family) {
    case AnsatzFamily::Constant:
      throw RankDeficientError(name + ": constant map has no 1-dimensional vertical");
    case AnsatzFamily::AlphaHopf:
    case AnsatzFamily::CylinderWinding: {
      Vec3 w(0.0, m2, -m1);  // annihilates the phase 1-form
      if (w[2] < 0 || (w[2] == 0 && w[1] < 0)) w = -w;
      return w;
    }
    case AnsatzFamily::Axisymmetric: {
      const double rho = x[0], z = x[2];
      const double Tr = axi->theta_rho(rho, z), Tz = axi->theta_z(rho, z);
      const double Pr = axi->psi_rho(rho, z), Pz = axi->psi_z(rho, z);
      Vec3 w(-l * Tz, k * (Tr * Pz - Tz * Pr), l * Tr);
      if (w[2] < 0 || (w[2] == 0 && w[1] < 0)) w = -w;
      return w;
    }
  }
  throw Error("unknown ansatz family");
}

AnsatzMap alpha_hopf_map(int k, int l, ProfileFunction profile, double target_radius,
                         const MetricSpec& metric) {
  AnsatzMap m;
  m.family = AnsatzFamily::AlphaHopf;
  m.k = k;
  m.l = l;
  m.target_radius = target_radius;
  m.profile = std::move(profile);
  m.m1 = -static_cast<double>(k);
  m.m2 = static_cast<double>(l);
  m.source = geometry_for(metric);
  m.name = "alpha_hopf(k=" + std::to_string(k) + ",l=" + std::to_string(l) + "," +
           m.profile.tag + ")";
  return m;
}

AnsatzMap cylinder_winding_map() {
  AnsatzMap m;
  m.family = AnsatzFamily::CylinderWinding;
  m.k = 1;
  m.l = 1;
  m.target_radius = 1.0;
  m.profile = profiles::winding();
  m.m1 = 1.0;   // theta
  m.m2 = -1.0;  // phi
  m.source = geometry_for(MetricSpec::cylinder());
  m.name = "cylinder_winding";
  return m;
}

AnsatzMap axisymmetric_map(int k, int l, AxisymmetricData data, double target_radius,
                           const Chart& chart) {
  AnsatzMap m;
  m.family = AnsatzFamily::Axisymmetric;
  m.k = k;
  m.l = l;
  m.target_radius = target_radius;
  m.axi = std::make_shared<AxisymmetricData>(std::move(data));
  m.source = {MetricSpec::cylinder(), chart};
  m.name = "axisymmetric(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
  return m;
}

AnsatzMap constant_map(const Vec3& p0, const MetricSpec& metric, double target_radius) {
  AnsatzMap m;
  m.family = AnsatzFamily::Constant;
  m.constant_point = p0;
  m.target_radius = target_radius;
  m.source = geometry_for(metric);
  m.name = "constant";
  return m;
}

AxisymmetricData rational_ansatz_data(int k, int l, std::function<double(double)> f,
                                      std::function<double(double)> df) {
  AxisymmetricData d;
  auto core = [k, l, f](double rho, double z) -> std::pair<double, double> {
    const double r = std::sqrt(rho * rho + z * z);
    const double fr = f(r);
    const double x0r = std::cos(fr), x0i = (r > 0 ? z / r : 0.0) * std::sin(fr);
    const double z1m = (r > 0 ? rho / r : 0.0) * std::sin(fr);
    const double aw = std::pow(z1m, l) / std::pow(std::hypot(x0r, x0i), k);
    const double theta = std::acos(std::clamp((1 - aw * aw) / (1 + aw * aw), -1.0, 1.0));
    const double psi = std::atan2(x0i, x0r);
    return {theta, psi};
  };
  d.theta = [core](double rho, double z) { return core(rho, z).first; };
  d.psi = [core](double rho, double z) { return core(rho, z).second; };
  const double h = 1e-6;
  d.theta_rho = [core, h](double rho, double z) {
    return (core(rho + h, z).first - core(rho - h, z).first) / (2 * h);
  };
  d.theta_z = [core, h](double rho, double z) {
    return (core(rho, z + h).first - core(rho, z - h).first) / (2 * h);
  };
  auto wrap = [](double a) { return std::remainder(a, 2 * kPi); };
  d.psi_rho = [core, h, wrap](double rho, double z) {
    return wrap(core(rho + h, z).second - core(rho - h, z).second) / (2 * h);
  };
  d.psi_z = [core, h, wrap](double rho, double z) {
    return wrap(core(rho, z + h).second - core(rho, z - h).second) / (2 * h);
  };
  (void)df;
  return d;
}

StrainSpectrum strain_spectrum(const AnsatzMap& map, const Vec3& x) {
  const auto& geo = map.source;
  geo.chart.require_interior(x);
  const Mat3 A = map.pullback_metric(x);
  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat3> es(A, G);
  if (es.info() != Eigen::Success) throw Error("strain eigensolve failed");
  const Vec3 w = es.eigenvalues();
  StrainSpectrum s;
  s.lambda1_sq = std::max(0.0, w[1]);
  s.lambda2_sq = std::max(0.0, w[2]);
  s.sigma2 = s.lambda1_sq * s.lambda2_sq;
  if (s.sigma2 < kRankTol)
    throw RankDeficientError(map.name + ": strain rank < 2 (sigma2 < 1e-12)");
  s.U = es.eigenvectors().col(0);
  s.E1 = es.eigenvectors().col(1);
  s.E2 = es.eigenvectors().col(2);
  if (s.U[2] < 0 || (std::abs(s.U[2]) < 1e-14 && s.U[1] < 0)) s.U = -s.U;
  return s;
}

Vec3 vertical_unit(const AnsatzMap& map, const Vec3& x) {
  if (map.family == AnsatzFamily::Constant)
    throw RankDeficientError(map.name + ": constant map");
  if (sigma2_density(map, x) < kRankTol)
    throw RankDeficientError(map.name + ": near-critical point, vertical not reported");
  const auto& geo = map.source;
  const Vec3 w = map.vertical_direction(x);
  const Mat3 G = metric_at(geo.metric, geo.chart, x);
  return w / std::sqrt(w.dot(G * w));
}

VectorFieldHandle vertical_unit_field(const AnsatzMap& map) {
  VectorFieldHandle U;
  U.components = [map](const Vec3& x) {
    const Vec3 w = map.vertical_direction(x);
    const Mat3 G = metric_at(map.source.metric, map.source.chart, x);
    return Vec3(w / std::sqrt(w.dot(G * w)));
  };
  if (map.profile_based()) {
    // constant direction; only the normalization depends on x0
    U.jacobian = [map](const Vec3& x) {
      const Vec3 w = map.vertical_direction(x);
      const Mat3 G = metric_at(map.source.metric, map.source.chart, x);
      const Mat3 dG = metric_partial_at(map.source.metric, map.source.chart, x, 0);
      const double N = w.dot(G * w);
      const double Np = w.dot(dG * w);
      Mat3 J = Mat3::Zero();
      J.col(0) = -0.5 * Np / std::pow(N, 1.5) * w;
      return J;
    };
  }
  return U;
}

Vec3 fiber_mean_curvature(const AnsatzMap& map, const Vec3& x) {
  const auto& geo = map.source;
  geo.chart.require_interior(x);
  if (sigma2_density(map, x) < kRankTol)
    throw RankDeficientError(map.name + ": near-critical point");
  const VectorFieldHandle U = vertical_unit_field(map);
  return covariant_derivative(U, U.components(x), geo.metric, geo.chart, x);
}

namespace {

// Profile-family closed form: sigma2 = C(x0) a'(x0)^2 sin^2(alpha) with
// C = R^4 (v^T G2^{-1} v) / g_00, v the phase covector in the (x1, x2) block.
struct ProfileSigma2 {
  double C = 0.0, Cp = 0.0;
};

ProfileSigma2 profile_sigma2_factor(const AnsatzMap& map, const Vec3& x) {
  const Mat3 G = metric_at(map.source.metric, map.source.chart, x);
  const Mat3 dG = metric_partial_at(map.source.metric, map.source.chart, x, 0);
  Eigen::Matrix2d G2, dG2;
  G2 << G(1, 1), G(1, 2), G(2, 1), G(2, 2);
  dG2 << dG(1, 1), dG(1, 2), dG(2, 1), dG(2, 2);
  const Eigen::Vector2d v(map.m1, map.m2);
  const Eigen::Matrix2d G2i = G2.inverse();
  const double q = v.dot(G2i * v);
  const double qp = -v.dot(G2i * dG2 * G2i * v);
  const double g00 = G(0, 0), g00p = dG(0, 0);
  const double R4 = std::pow(map.target_radius, 4);
  ProfileSigma2 out;
  out.C = R4 * q / g00;
  out.Cp = R4 * (qp * g00 - q * g00p) / (g00 * g00);
  return out;
}

}  // namespace

double sigma2_density(const AnsatzMap& map, const Vec3& x) {
  if (map.family == AnsatzFamily::Constant) return 0.0;
  if (map.profile_based()) {
    map.source.chart.require_interior(x);
    const auto f = profile_sigma2_factor(map, x);
    const double ap = map.profile.d1(x[0]);
    const double sa = std::sin(map.profile(x[0]));
    return f.C * ap * ap * sa * sa;
  }
  // generic route through the strain eigenvalues
  try {
    return strain_spectrum(map, x).sigma2;
  } catch (const RankDeficientError&) {
    return 0.0;
  }
}

double sigma2_two_form_route(const AnsatzMap& map, const Vec3& x) {
  const Mat3 w = map.pullback_area(x, /*unit_normalized=*/false);
  const Mat3 Gi = metric_inverse_at(map.source.metric, map.source.chart, x);
  return 0.5 * (Gi * w * Gi * w.transpose()).trace();
}

double sigma1_density(const AnsatzMap& map, const Vec3& x) {
  const Mat3 Gi = metric_inverse_at(map.source.metric, map.source.chart, x);
  return (Gi * map.pullback_metric(x)).trace();
}

ScalarField sigma2_field(const AnsatzMap& map) {
  ScalarField f;
  f.value = [map](const Vec3& x) { return sigma2_density(map, x); };
  if (map.profile_based()) {
    f.partials = [map](const Vec3& x) {
      const auto fac = profile_sigma2_factor(map, x);
      const double a = map.profile(x[0]);
      const double ap = map.profile.d1(x[0]), app = map.profile.d2(x[0]);
      const double sa = std::sin(a);
      const double core = ap * ap * sa * sa;
      const double corep = 2 * ap * app * sa * sa + ap * ap * ap * std::sin(2 * a);
      return Vec3(fac.Cp * core + fac.C * corep, 0.0, 0.0);
    };
  }
  return f;
}

ScalarField sigma1_field(const AnsatzMap& map) {
  ScalarField f;
  f.value = [map](const Vec3& x) { return sigma1_density(map, x); };
  return f;
}

ScalarField potential_pullback_field(const AnsatzMap& map, const Potential& pot) {
  ScalarField f;
  const double R = map.target_radius;
  f.value = [map, pot, R](const Vec3& x) { return pot.value(map.evaluate(x), R); };
  f.partials = [map, pot, R](const Vec3& x) {
    const Vec3 y = map.evaluate(x);
    const Mat3 D = map.differential(x);
    const double dp = pot.profile_derivative(y[2] / R);
    return Vec3(dp / R * D.row(2).transpose());
  };
  return f;
}

PoleExponents pole_exponents(const ProfileFunction& profile, double eps) {
  PoleExponents out;
  auto sin_alpha = [&](double s) { return std::abs(std::sin(profile(s))); };
  {
    const double f1 = sin_alpha(eps), f2 = sin_alpha(2 * eps);
    out.exponent_lo = std::log(f2 / f1) / std::log(std::sin(2 * eps) / std::sin(eps));
  }
  {
    const double hi = kPi / 2;
    const double f1 = sin_alpha(hi - eps), f2 = sin_alpha(hi - 2 * eps);
    out.exponent_hi = std::log(f2 / f1) / std::log(std::cos(hi - 2 * eps) / std::cos(hi - eps));
  }
  return out;
}

}  // namespace hopfluid

#include "hopfluid/topology.hpp"

#include <cmath>

#include "hopfluid/variational.hpp"

namespace hopfluid {

namespace {

void require_admissible(const ProfileFunction& p, const std::string& who) {
  if (!p.admissible(1e-8))
    throw InadmissibleProfileError(who + ": profile endpoints not in {0, pi}");
}

// Reduced Whitehead data on [0, pi/2]: with the primitive alpha-form
// A(s) dphi1 + B(s) dphi2, A' = w1, B' = w2, A(pi/2) = 0, B(0) = 0 (the
// coefficient must vanish where its circle degenerates), the integral of
// alpha ^ w over the chart is (2 pi)^2 int (B w1 - A w2) ds.
double reduced_primitive_integral(const std::vector<double>& w1, const std::vector<double>& w2,
                                  double h) {
  std::vector<double> A = cumulative_integral(w1, h);
  const double Aend = A.back();
  for (double& a : A) a -= Aend;
  const std::vector<double> B = cumulative_integral(w2, h);
  std::vector<double> integrand(w1.size());
  for (std::size_t i = 0; i < w1.size(); ++i) integrand[i] = B[i] * w1[i] - A[i] * w2[i];
  return cumulative_integral(integrand, h).back();
}

ChargeResult alpha_hopf_charge(const AnsatzMap& map, int grid_n) {
  require_admissible(map.profile, map.name);
  const int n = grid_n | 1;  // odd node count for Simpson pairs
  const double h = (kPi / 2) / (n - 1);
  std::vector<double> w1(n), w2(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 x(i * h, 0.3, 0.7);
    const Mat3 w = map.pullback_area(x, /*unit_normalized=*/true);
    w1[i] = w(0, 1);
    w2[i] = w(0, 2);
  }
  const double total = reduced_primitive_integral(w1, w2, h);
  ChargeResult q;
  q.raw_integral = map.source.chart.orientation * 0.25 * total;
  q.rounded = std::llround(q.raw_integral);
  q.defect = std::abs(q.raw_integral - static_cast<double>(q.rounded));
  return q;
}

ChargeResult axisymmetric_charge(const AnsatzMap& map, int grid_n) {
  const auto& d = *map.axi;
  // Theta value where the theta-circle degenerates (axis and infinity).
  const double theta_axis = d.theta(1e-7, 0.7);
  const double theta_far = d.theta(30.0, 17.0);
  auto near_pole = [](double v) { return std::min(std::abs(v), std::abs(v - kPi)) < 1e-5; };
  if (!near_pole(theta_axis) || !near_pole(theta_far) ||
      std::abs(theta_axis - theta_far) > 1e-4)
    throw InadmissibleProfileError(map.name + ": axis/far field values not at a single pole");
  const double c1 = std::cos(theta_axis) > 0 ? 1.0 : -1.0;
  const double c2 = -c1;

  const double L = 12.0;
  std::vector<double> gx, gw;
  gauss_legendre(grid_n >= 512 ? 200 : 120, gx, gw);
  double I = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    const double rho = 0.5 * L * (gx[i] + 1.0);
    const double wr = 0.5 * L * gw[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < gx.size(); ++j) {
      const double z = L * gx[j];
      const double wz = L * gw[j];
      const double T = d.theta(rho, z);
      const double J = d.theta_rho(rho, z) * d.psi_z(rho, z) - d.theta_z(rho, z) * d.psi_rho(rho, z);
      inner += std::sin(T) * J * wz;
    }
    I += wr * inner;
  }
  ChargeResult q;
  q.raw_integral = map.k * map.l * (c2 - c1) / (8 * kPi) * I;
  q.rounded = std::llround(q.raw_integral);
  q.defect = std::abs(q.raw_integral - static_cast<double>(q.rounded));
  return q;
}

}  // namespace

ChargeResult hopf_charge(const AnsatzMap& map, int grid_n) {
  switch (map.family) {
    case AnsatzFamily::AlphaHopf:
      return alpha_hopf_charge(map, grid_n);
    case AnsatzFamily::Axisymmetric:
      return axisymmetric_charge(map, grid_n);
    case AnsatzFamily::Constant: {
      ChargeResult q;  // null-homotopic
      return q;
    }
    case AnsatzFamily::CylinderWinding:
      throw Error("hopf_charge: supported for alpha_hopf and axisymmetric ansatz maps");
  }
  throw Error("unknown ansatz family");
}

double helicity(const FlowField& flow, int grid_n) {
  const Chart& chart = flow.source.chart;
  if (chart.coords[0] != "s") throw Error("helicity: expected an S^3 chart");
  const int n = grid_n | 1;
  const double delta = 1e-9;
  const double h = (kPi / 2 - 2 * delta) / (n - 1);
  std::vector<double> w1(n), w2(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 x(delta + i * h, 0.3, 0.7);
    const Vec3 v = flow.velocity.components(x);
    if (std::abs(v[0]) > 1e-10)
      throw Error("helicity: flow has a radial (s) component; reduction not applicable");
    const double sg = volume_density(flow.source.metric, chart, x);
    w1[i] = chart.orientation * sg * v[2];
    w2[i] = -chart.orientation * sg * v[1];
  }
  const double total = reduced_primitive_integral(w1, w2, h);
  return 4.0 * chart.orientation * total;
}

double helicity(const FlowField& flow, const AnsatzMap& generator, int grid_n) {
  if (generator.family != AnsatzFamily::AlphaHopf)
    throw Error("helicity: generator must be an alpha-Hopf map");
  require_admissible(generator.profile, generator.name);
  return helicity(flow, grid_n);
}

BoundCheck bound_check_sigma2(const AnsatzMap& map, double mu1, const QuadratureSpec& q,
                              std::optional<long long> charge_override) {
  BoundCheck b;
  long long Q = 0;
  if (charge_override) {
    Q = *charge_override;
  } else {
    Q = hopf_charge(map).rounded;
  }
  if (Q == 0) throw ZeroChargeError(map.name + ": bound is trivially true at zero charge");
  const double R4 = std::pow(map.target_radius, 4);
  auto s2 = [&](const Vec3& x) { return sigma2_density(map, x) / R4; };
  b.energy = 0.5 * integrate(s2, map.source.metric, map.source.chart, q).value;
  b.charge_or_helicity = static_cast<double>(Q);
  b.bound_constant = 8 * kPi * kPi * mu1;
  b.has_constant = true;
  b.ratio = b.energy / (b.bound_constant * std::abs(static_cast<double>(Q)));
  b.satisfied = b.ratio >= 1.0 - 1e-6 ? 1 : 0;
  return b;
}

BoundCheck bound_ratio_mass_term(const AnsatzMap& map, const Potential& pot,
                                 const QuadratureSpec& q,
                                 std::optional<long long> charge_override) {
  BoundCheck b;
  long long Q = charge_override ? *charge_override : hopf_charge(map).rounded;
  if (Q == 0) throw ZeroChargeError(map.name + ": ratio undefined at zero charge");
  b.energy = energy(map, pot, 0.0, q).total;
  b.charge_or_helicity = static_cast<double>(Q);
  b.has_constant = false;
  b.ratio = b.energy / std::pow(std::abs(static_cast<double>(Q)), 0.75);
  b.satisfied = -1;
  return b;
}

}  // namespace hopfluid

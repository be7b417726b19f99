#ifndef HOPFLUID_ANSATZ_HPP
#define HOPFLUID_ANSATZ_HPP

#include <memory>
#include <optional>
#include <string>

#include "hopfluid/diffops.hpp"
#include "hopfluid/potential.hpp"
#include "hopfluid/profile.hpp"

namespace hopfluid {

enum class AnsatzFamily { AlphaHopf, Axisymmetric, CylinderWinding, Constant };

/// Axially symmetric field data on the cylindrical chart:
/// phi = R(sin Theta e^{i(l theta - k psi)}, cos Theta), Theta/psi functions of (rho, z)
/// with closed-form first partials.
struct AxisymmetricData {
  std::function<double(double, double)> theta, theta_rho, theta_z;
  std::function<double(double, double)> psi, psi_rho, psi_z;
};

/// Parametric map into the round sphere of radius `target_radius`.
/// Profile-based families share the phase structure
///   phi = R (sin(alpha(x0)) e^{i(m1 x1 + m2 x2)}, cos(alpha(x0))).
struct AnsatzMap {
  AnsatzFamily family = AnsatzFamily::Constant;
  int k = 1, l = 1;
  double target_radius = 1.0;
  SourceGeometry source;
  ProfileFunction profile;
  double m1 = 0.0, m2 = 0.0;  // phase coefficients on coordinates 1, 2
  Vec3 constant_point{0.0, 0.0, 1.0};
  std::shared_ptr<AxisymmetricData> axi;
  std::string name;

  Vec3 evaluate(const Vec3& x) const;

  /// D(A, i) = d_i phi^A, ambient target components. Closed form.
  Mat3 differential(const Vec3& x) const;

  /// (phi^* h)_{ij} = sum_A D(A,i) D(A,j).
  Mat3 pullback_metric(const Vec3& x) const;

  /// Pullback of the target area 2-form; `unit_normalized` rescales by
  /// 1/target_radius^2 (the unit-sphere form pulled through phi/R).
  Mat3 pullback_area(const Vec3& x, bool unit_normalized) const;

  /// Unnormalized kernel direction of d phi (closed form); undefined for Constant.
  Vec3 vertical_direction(const Vec3& x) const;

  bool profile_based() const {
    return family == AnsatzFamily::AlphaHopf || family == AnsatzFamily::CylinderWinding;
  }
};

AnsatzMap alpha_hopf_map(int k, int l, ProfileFunction profile, double target_radius,
                         const MetricSpec& metric);
AnsatzMap cylinder_winding_map();  // R^2 x S^1 winding field, unit target
AnsatzMap axisymmetric_map(int k, int l, AxisymmetricData data, double target_radius,
                           const Chart& chart);
AnsatzMap constant_map(const Vec3& p0, const MetricSpec& metric, double target_radius);

/// The compactified rational ansatz A_{k,l} on R^3 realized as AxisymmetricData:
/// (z0, z1) = (cos f + i (z/r) sin f, (rho e^{i theta}/r) sin f), w = z1^l / z0^k,
/// with shape function f: [0, inf) -> (pi, 0).
AxisymmetricData rational_ansatz_data(int k, int l, std::function<double(double)> f,
                                      std::function<double(double)> df);

struct StrainSpectrum {
  double lambda1_sq = 0.0;
  double lambda2_sq = 0.0;
  double sigma2 = 0.0;  // lambda1^2 lambda2^2
  Vec3 U, E1, E2;       // g-orthonormal eigenframe, U spans ker d phi
};

/// Eigen-data of the strain tensor under the source metric. Throws RankDeficient
/// when sigma2 < 1e-12 (critical point).
StrainSpectrum strain_spectrum(const AnsatzMap& map, const Vec3& x);

Vec3 vertical_unit(const AnsatzMap& map, const Vec3& x);

/// mu^V = nabla_U U for the unit vertical field.
Vec3 fiber_mean_curvature(const AnsatzMap& map, const Vec3& x);

/// lambda1^2 lambda2^2; 0 at critical points, closed form for profile families.
double sigma2_density(const AnsatzMap& map, const Vec3& x);

/// Independent route |phi^* omega|^2 through the pullback 2-form.
double sigma2_two_form_route(const AnsatzMap& map, const Vec3& x);

/// sigma1 = |d phi|^2 = trace_g (phi^* h).
double sigma1_density(const AnsatzMap& map, const Vec3& x);

/// sigma2 as a scalar field with closed-form partials for profile families
/// (finite-difference fallback otherwise).
ScalarField sigma2_field(const AnsatzMap& map);
ScalarField sigma1_field(const AnsatzMap& map);

/// P = Pbar o phi with chain-rule partials.
ScalarField potential_pullback_field(const AnsatzMap& map, const Potential& pot);

/// Unit vertical field handle with closed-form jacobian where available.
VectorFieldHandle vertical_unit_field(const AnsatzMap& map);

struct PoleExponents {
  double exponent_lo = 0.0;  // sin(alpha)/sin^a s finite as s -> lo pole
  double exponent_hi = 0.0;  // sin(alpha)/cos^b s finite as s -> hi pole
};

/// Log-ratio estimate of the pole regularity exponents of a profile on [0, pi/2].
PoleExponents pole_exponents(const ProfileFunction& profile, double eps = 1e-3);

}  // namespace hopfluid

#endif

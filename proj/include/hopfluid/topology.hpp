#ifndef HOPFLUID_TOPOLOGY_HPP
#define HOPFLUID_TOPOLOGY_HPP

#include <optional>

#include "hopfluid/fluid.hpp"
#include "hopfluid/quadrature.hpp"

namespace hopfluid {

struct ChargeResult {
  double raw_integral = 0.0;
  long long rounded = 0;
  double defect = 0.0;  // |raw - rounded|
};

/// Hopf invariant by the Whitehead integral, reduced for the ansatz symmetry to a
/// 1-D integral in the profile parameter (alpha-Hopf) or a 2-D half-plane
/// integral (axisymmetric). The pullback 2-form is normalized to the unit sphere
/// (total target area 4 pi) before the 1/(16 pi^2) formula.
ChargeResult hopf_charge(const AnsatzMap& map, int grid_n = 4096);

/// Helicity of a flow of the form V = (0, v1(s), v2(s)) on an S^3 chart, by the
/// same reduced primitive-form construction: H = (1/pi^2) int alpha ^ i_V nu_g.
double helicity(const FlowField& flow, int grid_n = 4096);

/// Helicity of the dual flow of an alpha-Hopf map; checks profile admissibility.
double helicity(const FlowField& flow, const AnsatzMap& generator, int grid_n = 4096);

struct BoundCheck {
  double energy = 0.0;
  double charge_or_helicity = 0.0;
  double bound_constant = 0.0;
  bool has_constant = false;    // false: constant unspecified, ratio-only report
  double ratio = 0.0;
  int satisfied = -1;           // 1 pass, 0 fail, -1 ratio-only
};

/// E_{sigma2}(unit-normalized field) >= 8 pi^2 mu1 |Q|; mu1 is supplied by the
/// caller (e.g. the measured Beltrami constant of the Hopf field).
BoundCheck bound_check_sigma2(const AnsatzMap& map, double mu1, const QuadratureSpec& q,
                              std::optional<long long> charge_override = std::nullopt);

/// E_{sigma2,P} / |Q|^{3/4}; the comparison constant is not specified, so the
/// check only reports the ratio.
BoundCheck bound_ratio_mass_term(const AnsatzMap& map, const Potential& pot,
                                 const QuadratureSpec& q,
                                 std::optional<long long> charge_override = std::nullopt);

}  // namespace hopfluid

#endif

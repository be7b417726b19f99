#ifndef HOPFLUID_VARIATIONAL_HPP
#define HOPFLUID_VARIATIONAL_HPP

#include <vector>

#include "hopfluid/ansatz.hpp"
#include "hopfluid/quadrature.hpp"

namespace hopfluid {

/// E = kappa * dirichlet_term + sigma2_term + potential_term, each term already
/// carrying its 1/2 weight: sigma2_term = (1/2) int sigma2, dirichlet_term =
/// (1/2) int |d phi|^2, potential_term = int Pbar o phi.
struct EnergyBreakdown {
  double sigma2_term = 0.0;
  double potential_term = 0.0;
  double dirichlet_term = 0.0;
  double kappa = 0.0;
  double total = 0.0;
  double quadrature_error_estimate = 0.0;
};

EnergyBreakdown energy(const AnsatzMap& map, const Potential& pot, double kappa,
                       const QuadratureSpec& q);
EnergyBreakdown energy(const AnsatzMap& map, const Potential& pot, double kappa);

/// Flow kinetic energy int |V|^2 nu = int sigma2 nu of the dual flow; equals the
/// functional on configurations with 2 Pbar o phi = sigma2.
double flow_kinetic_energy(const AnsatzMap& map, const QuadratureSpec& q);

struct ELResidual {
  Vec3 vector_residual;  // sigma2 mu^V - grad^H(sigma2)/2 + grad(Pbar o phi)
  double norm = 0.0;     // g-norm at the point
};

/// Pointwise residual of the criticality equation; zero iff the configuration
/// is critical at x. Report lives on the source manifold.
ELResidual el_residual(const AnsatzMap& map, const Potential& pot, const Vec3& x);

/// Sup of the residual g-norm over an n^3 pole-avoiding grid.
double el_residual_sup(const AnsatzMap& map, const Potential& pot, int n, double margin = 0.02,
                       double box_cap = 12.0);

/// Tension field route: tau = -d phi (l2^2 g(T,E1) E1 + l1^2 g(T,E2) E2),
/// T = mu^V - grad^H ln |l1 l2|. Target tangent vector.
Vec3 tension_sigma2(const AnsatzMap& map, const Vec3& x);

/// S = (1/2) sigma2 (g^V - g^H) as a covariant matrix.
Mat3 stress_tensor_sigma2(const AnsatzMap& map, const Vec3& x);

/// Defect of h(tau, d phi(X)) = -(div S)(X) over the coordinate basis,
/// divergence taken by finite differences of the stress.
double stress_divergence_identity_check(const AnsatzMap& map, const Potential& pot,
                                        const Vec3& x);

/// True iff |grad(Pbar o phi)| -> 0 approaching the pole along coordinate 0.
bool critical_point_check(const AnsatzMap& map, const Potential& pot, const Vec3& x_critical);

struct DerrickSample {
  double lambda = 1.0;
  double sigma2_term = 0.0;
  double potential_term = 0.0;
  double total = 0.0;
  double predicted_total = 0.0;  // lambda * s2(1) + pot(1) / lambda^3
};

/// Energies of the dilation family phi_lambda(x) = phi(lambda x) on an R^3 chart.
std::vector<DerrickSample> derrick_scan(const AnsatzMap& map, const Potential& pot,
                                        const std::vector<double>& lambdas,
                                        const QuadratureSpec& q);

/// d phi applied to a source vector.
inline Vec3 push_forward(const AnsatzMap& map, const Vec3& x, const Vec3& v) {
  return map.differential(x) * v;
}

}  // namespace hopfluid

#endif

#ifndef HOPFLUID_PROFILE_SOLVER_HPP
#define HOPFLUID_PROFILE_SOLVER_HPP

#include "hopfluid/ansatz.hpp"

namespace hopfluid {

/// Pointwise criticality problem for minimal-fibre alpha-Hopf maps:
/// (1/2) lambda1^2 lambda2^2 = Pbar o phi, which separates into
/// F(alpha) alpha' = -a^2 G(s) with F = sin(alpha)/sqrt(Pbar(cos alpha)).
struct ProfileProblem {
  MetricSpec metric;          // squashed or conformal family; `a` is the unknown
  Potential potential;
  int k = 1, l = 1;
  double alpha_lo = kPi;      // boundary value at s = 0
  double alpha_hi = 0.0;      // boundary value at s = pi/2
  double target_radius = 0.5;
};

struct SolvedProfile {
  ProfileFunction profile;  // tabulated, with ODE-exact derivatives
  double a = 0.0;           // metric scale
};

/// Shooting (bisection on the scale a) + separated quadrature.
SolvedProfile solve_profile(const ProfileProblem& problem, int grid_n = 4096);

/// Coupled first-order pair for the old-baby potential on the round sphere:
/// alpha' sin alpha = 2 sin(2s) h(cos^2 s) and
/// alpha' sin alpha = -k^2 sin(2s) h h'(cos^2 s); eliminating h gives h affine
/// in cos^2 s and alpha = arccos(2(1+k^-2)cos^2 s - 2k^-2 cos^4 s - 1).
struct CoupledSolution {
  ProfileFunction alpha;
  std::function<double(double)> h;  // h(t), t = cos^2 s
  std::vector<double> t_grid;
  std::vector<double> h_values;
  bool smooth = false;  // pole-exponent test: passes only for k = 1
};

CoupledSolution solve_coupled_h(int k);

/// Max interior defect of (1/2) lambda1^2 lambda2^2 - Pbar o phi for the given
/// profile/scale (interior margin excludes the poles).
double verify_profile(const ProfileProblem& problem, const ProfileFunction& profile, double a,
                      int grid_n = 1024, double margin = 1e-3);

}  // namespace hopfluid

#endif

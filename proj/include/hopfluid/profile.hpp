#ifndef HOPFLUID_PROFILE_HPP
#define HOPFLUID_PROFILE_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hopfluid/errors.hpp"

namespace hopfluid {

/// Natural cubic-spline interpolant with not-a-knot end conditions.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives at the knots
  std::size_t locate(double t) const;
};

/// Profile function alpha with analytic first and second derivatives where the
/// closed form provides them; tabulated profiles interpolate with a cubic spline.
struct ProfileFunction {
  std::string kind = "closed_form";
  std::string tag;

  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;

  double param_lo = 0.0, param_hi = 0.0;
  double end_lo = 0.0, end_hi = 0.0;  // declared boundary values alpha(lo), alpha(hi)

  double operator()(double s) const { return value(s); }

  /// Endpoints in {0, pi} within tol (either order).
  bool admissible(double tol = 1e-8) const;
};

namespace profiles {

/// alpha(s) = pi (k^3 - Q^{3/2}) / (k^3 - l^3), Q = k^2 sin^2 s + l^2 cos^2 s;
/// reduces to pi cos^2 s at k = l. Decreasing from pi to 0 on [0, pi/2].
ProfileFunction squashed(int k, int l);

/// alpha(s) = l pi/(k-l) (k/sqrt(Q) - 1); pi cos^2 s at k = l.
ProfileFunction conformal(int k, int l);

/// alpha(s) = 2 arctan(tan^k s), increasing 0 -> pi.
ProfileFunction harmonic(int k);

/// alpha(s) = arccos(2(1+k^-2)cos^2 s - 2 k^-2 cos^4 s - 1), increasing 0 -> pi.
ProfileFunction old_baby(int k);

/// alpha(r) = arccos(1 - 2/sqrt(r^2+1)) on [0, inf), decreasing pi -> 0.
ProfileFunction winding();

/// Hopf profile alpha = 2s.
ProfileFunction hopf();

ProfileFunction from_table(std::vector<double> s, std::vector<double> alpha,
                           const std::string& tag = "tabulated");

/// alpha(beta(s)) with closed-form beta; used for reparametrization tests.
ProfileFunction composed(const ProfileFunction& alpha, std::function<double(double)> beta,
                         std::function<double(double)> beta_d1,
                         std::function<double(double)> beta_d2);

}  // namespace profiles

}  // namespace hopfluid

#endif

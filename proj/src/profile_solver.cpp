#include "hopfluid/profile_solver.hpp"

#include <cmath>

#include "hopfluid/quadrature.hpp"

namespace hopfluid {

namespace {

// G(s) from (1/2) sigma2 = Pbar: alpha'^2 sin^2(alpha)/Pbar(cos alpha) = 2 a^4 / (R^4 C0(s))
// with sigma2 = (1/a^4) C0(s) R^4 alpha'^2 sin^2 alpha (both supported families put the
// scale in front this way). G = sqrt(2 / C0) / R^2 * ... folded so that
// F(alpha) alpha' = -a^2 G(s).
double G_of(const ProfileProblem& p, double s) {
  const double sn = std::sin(s), cs = std::cos(s);
  const double Q = p.k * p.k * sn * sn + p.l * p.l * cs * cs;
  const double R2 = p.target_radius * p.target_radius;
  switch (p.metric.family) {
    case MetricFamily::S3Squashed:
      // C0 = 1/(sin^2 cos^2 Q)
      return std::sqrt(2.0) * sn * cs * std::sqrt(Q) / R2;
    case MetricFamily::S3Conformal: {
      // C0 = Q^3/(k^4 l^4 sin^2 cos^2)
      const double kl = static_cast<double>(p.k) * p.l;
      return std::sqrt(2.0) * kl * kl * sn * cs / (std::pow(Q, 1.5) * R2);
    }
    default:
      throw Error("solve_profile: supported metric families are squashed and conformal");
  }
}

double F_of(const Potential& pot, double alpha) {
  const double P = pot.profile_value(std::cos(alpha));
  if (P <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sin(alpha) / std::sqrt(P);
}

}  // namespace

SolvedProfile solve_profile(const ProfileProblem& problem, int grid_n) {
  auto near = [](double v, double w) { return std::abs(v - w) < 1e-9; };
  if (!(near(problem.alpha_lo, kPi) && near(problem.alpha_hi, 0.0)) &&
      !(near(problem.alpha_lo, 0.0) && near(problem.alpha_hi, kPi)))
    throw InadmissibleProfileError("solve_profile: boundary values must be {0, pi}");
  if (problem.k < 1 || problem.l < 1) throw Error("solve_profile: k, l >= 1");

  // Cumulative target: H(alpha(s)) = a^2 int_0^s G, H(alpha) = int_alpha^pi F.
  const int n = std::max(129, grid_n | 1);
  const double hs = (kPi / 2) / (n - 1);
  std::vector<double> Gv(n);
  for (int i = 0; i < n; ++i) {
    Gv[i] = G_of(problem, i * hs);
    if (i > 0 && i + 1 < n && Gv[i] <= 0.0)
      throw NonMonotoneProfileError("solve_profile: separated integrand changes sign");
  }
  const std::vector<double> cumG = cumulative_integral(Gv, hs);
  const double totalG = cumG.back();

  // F is evaluated on a fine alpha-grid; endpoints are integrable square-root
  // singular for vanishing potentials, handled by open Gauss panels.
  const int na = 2048;
  std::vector<double> alpha_knots(na + 1), cumF(na + 1, 0.0);
  const double ha = kPi / na;
  for (int i = 0; i <= na; ++i) alpha_knots[i] = kPi - i * ha;  // from pi down to 0
  for (int i = 1; i <= na; ++i) {
    const double lo = alpha_knots[i], hi = alpha_knots[i - 1];
    cumF[i] = cumF[i - 1] +
              integrate_1d([&](double a) { return F_of(problem.potential, a); }, lo, hi, 16);
  }
  const double totalF = cumF.back();

  // Shooting on the scale: defect(a) = a^2 totalG - totalF, monotone in a.
  auto defect = [&](double a) { return a * a * totalG - totalF; };
  double lo_a = 1e-8, hi_a = 10.0;
  if (defect(hi_a) < 0.0 || defect(lo_a) > 0.0)
    throw NoAdmissibleScaleError("solve_profile: no root bracketed in (0, 10]");
  while (hi_a - lo_a > 1e-12) {
    const double mid = 0.5 * (lo_a + hi_a);
    (defect(mid) <= 0.0 ? lo_a : hi_a) = mid;
  }
  const double a = 0.5 * (lo_a + hi_a);

  // Invert H on the s-grid: alpha_i solves cumF(pi -> alpha_i) = a^2 cumG(s_i).
  const bool descending = near(problem.alpha_lo, kPi);
  std::vector<double> sgrid(n), agrid(n);
  for (int i = 0; i < n; ++i) {
    sgrid[i] = i * hs;
    const double target = std::clamp(a * a * cumG[i], 0.0, totalF);
    // binary search in cumF (increasing in knot index)
    int lo = 0, hi = na;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      (cumF[mid] <= target ? lo : hi) = mid;
    }
    const double span = cumF[hi] - cumF[lo];
    const double frac = span > 0 ? (target - cumF[lo]) / span : 0.0;
    double al = alpha_knots[lo] + frac * (alpha_knots[hi] - alpha_knots[lo]);
    if (!descending) al = kPi - al;
    agrid[i] = al;
  }
  agrid.front() = problem.alpha_lo;
  agrid.back() = problem.alpha_hi;

  ProfileFunction prof = profiles::from_table(sgrid, agrid, "solved");
  // ODE-exact derivatives on top of the spline value.
  const ProfileProblem pb = problem;
  const double sign = descending ? -1.0 : 1.0;
  auto value = prof.value;
  prof.d1 = [pb, a, sign, value](double s) {
    return sign * a * a * G_of(pb, s) / F_of(pb.potential, value(s));
  };
  auto d1 = prof.d1;
  prof.d2 = [pb, a, sign, value, d1](double s) {
    const double h = 1e-6;
    return (d1(s + h) - d1(s - h)) / (2 * h);
  };
  prof.param_lo = 0.0;
  prof.param_hi = kPi / 2;
  prof.end_lo = problem.alpha_lo;
  prof.end_hi = problem.alpha_hi;
  SolvedProfile out;
  out.profile = std::move(prof);
  out.a = a;
  return out;
}

CoupledSolution solve_coupled_h(int k) {
  if (k < 1) throw Error("solve_coupled_h: k >= 1");
  CoupledSolution sol;
  sol.alpha = profiles::old_baby(k);
  const double ik2 = 1.0 / (static_cast<double>(k) * k);
  sol.h = [ik2](double t) { return 1.0 + ik2 - 2.0 * ik2 * t; };
  const int n = 513;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    sol.t_grid.push_back(t);
    sol.h_values.push_back(sol.h(t));
  }
  const PoleExponents pe = pole_exponents(sol.alpha);
  sol.smooth = pe.exponent_lo >= k - 0.01 && pe.exponent_hi >= k - 0.01;
  return sol;
}

double verify_profile(const ProfileProblem& problem, const ProfileFunction& profile, double a,
                      int grid_n, double margin) {
  MetricSpec spec = problem.metric;
  spec.k = problem.k;
  spec.l = problem.l;
  spec.a = a;
  const AnsatzMap map =
      alpha_hopf_map(problem.k, problem.l, profile, problem.target_radius, spec);
  double sup = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    const double s = margin + (kPi / 2 - 2 * margin) * (i + 0.5) / grid_n;
    const Vec3 x(s, 0.2, 0.4);
    const double s2 = sigma2_density(map, x);
    const double P = problem.potential.profile_value(std::cos(profile(s)));
    sup = std::max(sup, std::abs(0.5 * s2 - P));
  }
  return sup;
}

}  // namespace hopfluid

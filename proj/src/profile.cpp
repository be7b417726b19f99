#include "hopfluid/profile.hpp"

#include <algorithm>
#include <cmath>

#include "hopfluid/chart.hpp"

namespace hopfluid {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 4 || y_.size() != n) throw Error("spline needs >= 4 knots");
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    if (h[i] <= 0) throw Error("spline knots must increase");
  }
  // Tridiagonal system for interior moments; not-a-knot folds the boundary
  // moments into the first/last interior rows.
  const std::size_t m = n - 2;
  std::vector<double> a(m, 0.0), b(m, 0.0), c(m, 0.0), d(m, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t r = i - 1;
    a[r] = h[i - 1];
    b[r] = 2 * (h[i - 1] + h[i]);
    c[r] = h[i];
    d[r] = 6 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  // M0 = (1 + h0/h1) M1 - (h0/h1) M2
  {
    const double r0 = h[0] / h[1];
    b[0] += a[0] * (1 + r0);
    c[0] += a[0] * (-r0);
    a[0] = 0;
  }
  // Mn-1 = (1 + h_{n-2}/h_{n-3}) M_{n-2} - (h_{n-2}/h_{n-3}) M_{n-3}
  {
    const double r1 = h[n - 2] / h[n - 3];
    b[m - 1] += c[m - 1] * (1 + r1);
    a[m - 1] += c[m - 1] * (-r1);
    c[m - 1] = 0;
  }
  // Thomas solve
  for (std::size_t i = 1; i < m; ++i) {
    const double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  std::vector<double> M(m);
  M[m - 1] = d[m - 1] / b[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) M[i] = (d[i] - c[i] * M[i + 1]) / b[i];
  m_.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) m_[i + 1] = M[i];
  m_[0] = (1 + h[0] / h[1]) * m_[1] - (h[0] / h[1]) * m_[2];
  m_[n - 1] = (1 + h[n - 2] / h[n - 3]) * m_[n - 2] - (h[n - 2] / h[n - 3]) * m_[n - 3];
}

std::size_t CubicSpline::locate(double t) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin() - 1);
  return std::min(i, x_.size() - 2);
}

double CubicSpline::operator()(double t) const {
  const std::size_t i = locate(t);
  const double h = x_[i + 1] - x_[i], u = x_[i + 1] - t, v = t - x_[i];
  return (m_[i] * u * u * u + m_[i + 1] * v * v * v) / (6 * h) +
         (y_[i] / h - m_[i] * h / 6) * u + (y_[i + 1] / h - m_[i + 1] * h / 6) * v;
}

double CubicSpline::derivative(double t) const {
  const std::size_t i = locate(t);
  const double h = x_[i + 1] - x_[i], u = x_[i + 1] - t, v = t - x_[i];
  return (-m_[i] * u * u + m_[i + 1] * v * v) / (2 * h) -
         (y_[i] / h - m_[i] * h / 6) + (y_[i + 1] / h - m_[i + 1] * h / 6);
}

double CubicSpline::second_derivative(double t) const {
  const std::size_t i = locate(t);
  const double h = x_[i + 1] - x_[i];
  return (m_[i] * (x_[i + 1] - t) + m_[i + 1] * (t - x_[i])) / h;
}

bool ProfileFunction::admissible(double tol) const {
  auto near_pole = [tol](double v) {
    return std::abs(v) <= tol || std::abs(v - kPi) <= tol;
  };
  return near_pole(end_lo) && near_pole(end_hi);
}

namespace profiles {

namespace {

double Q_of(int k, int l, double s) {
  const double sn = std::sin(s), cs = std::cos(s);
  return k * k * sn * sn + l * l * cs * cs;
}
double Qp_of(int k, int l, double s) { return (k * k - l * l) * std::sin(2 * s); }
double Qpp_of(int k, int l, double s) { return 2.0 * (k * k - l * l) * std::cos(2 * s); }

ProfileFunction cos2_profile() {
  ProfileFunction p;
  p.tag = "pi_cos2";
  p.value = [](double s) { return kPi * std::cos(s) * std::cos(s); };
  p.d1 = [](double s) { return -kPi * std::sin(2 * s); };
  p.d2 = [](double s) { return -2 * kPi * std::cos(2 * s); };
  p.param_lo = 0.0;
  p.param_hi = kPi / 2;
  p.end_lo = kPi;
  p.end_hi = 0.0;
  return p;
}

// alpha = arccos(psi(t)) with t = cos^2 s; handles the arccos chain with
// sin-alpha cancellation kept explicit.
ProfileFunction arccos_of_cos2(std::function<double(double)> psi,
                               std::function<double(double)> dpsi,
                               std::function<double(double)> ddpsi, const std::string& tag,
                               double end_lo, double end_hi) {
  ProfileFunction p;
  p.tag = tag;
  auto alpha = [psi](double s) {
    const double c = std::cos(s);
    return std::acos(std::clamp(psi(c * c), -1.0, 1.0));
  };
  p.value = alpha;
  p.d1 = [psi, dpsi, alpha](double s) {
    const double t = std::cos(s) * std::cos(s);
    const double sa = std::sin(alpha(s));
    const double tp = -std::sin(2 * s);
    return -dpsi(t) * tp / sa;
  };
  p.d2 = [psi, dpsi, ddpsi, alpha](double s) {
    const double t = std::cos(s) * std::cos(s);
    const double sa = std::sin(alpha(s));
    const double ca = psi(t);
    const double tp = -std::sin(2 * s), tpp = -2 * std::cos(2 * s);
    const double ap = -dpsi(t) * tp / sa;
    return -(ddpsi(t) * tp * tp + dpsi(t) * tpp + ca * ap * ap) / sa;
  };
  p.param_lo = 0.0;
  p.param_hi = kPi / 2;
  p.end_lo = end_lo;
  p.end_hi = end_hi;
  return p;
}

}  // namespace

ProfileFunction squashed(int k, int l) {
  if (k == l) return cos2_profile();
  ProfileFunction p;
  p.tag = "squashed_k" + std::to_string(k) + "_l" + std::to_string(l);
  const double den = 4.0 * (k * k * k - l * l * l);
  p.value = [k, l, den](double s) {
    const double Q = Q_of(k, l, s);
    return kPi * (4.0 * k * k * k - std::sqrt(2.0) * std::pow(2.0 * Q, 1.5)) / den;
  };
  p.d1 = [k, l, den](double s) {
    const double Q = Q_of(k, l, s);
    // d/ds of -pi sqrt2 (2Q)^{3/2} / den = -pi sqrt2 * 3 sqrt(2Q) Qp / den
    return -kPi * std::sqrt(2.0) * 3.0 * std::sqrt(2.0 * Q) * Qp_of(k, l, s) / den;
  };
  p.d2 = [k, l, den](double s) {
    const double Q = Q_of(k, l, s);
    const double Qp = Qp_of(k, l, s), Qpp = Qpp_of(k, l, s);
    return -kPi * std::sqrt(2.0) * 3.0 *
           (Qp * Qp / std::sqrt(2.0 * Q) + std::sqrt(2.0 * Q) * Qpp) / den;
  };
  p.param_lo = 0.0;
  p.param_hi = kPi / 2;
  p.end_lo = kPi;
  p.end_hi = 0.0;
  return p;
}

ProfileFunction conformal(int k, int l) {
  if (k == l) return cos2_profile();
  ProfileFunction p;
  p.tag = "conformal_k" + std::to_string(k) + "_l" + std::to_string(l);
  const double pref = l * kPi / (k - l);
  p.value = [k, l, pref](double s) {
    return pref * (k / std::sqrt(Q_of(k, l, s)) - 1.0);
  };
  p.d1 = [k, l, pref](double s) {
    const double Q = Q_of(k, l, s);
    return -0.5 * pref * k * Qp_of(k, l, s) / std::pow(Q, 1.5);
  };
  p.d2 = [k, l, pref](double s) {
    const double Q = Q_of(k, l, s);
    const double Qp = Qp_of(k, l, s);
    return pref * k * (0.75 * Qp * Qp / std::pow(Q, 2.5) - 0.5 * Qpp_of(k, l, s) / std::pow(Q, 1.5));
  };
  p.param_lo = 0.0;
  p.param_hi = kPi / 2;
  p.end_lo = kPi;
  p.end_hi = 0.0;
  return p;
}

ProfileFunction harmonic(int k) {
  ProfileFunction p;
  p.tag = "harmonic_k" + std::to_string(k);
  p.value = [k](double s) { return 2.0 * std::atan(std::pow(std::tan(s), k)); };
  p.d1 = [k](double s) {
    const double sn = std::sin(s), cs = std::cos(s);
    const double D = std::pow(sn, 2 * k) + std::pow(cs, 2 * k);
    return 2.0 * k * std::pow(sn, k - 1) * std::pow(cs, k - 1) / D;
  };
  p.d2 = [k](double s) {
    const double sn = std::sin(s), cs = std::cos(s);
    const double D = std::pow(sn, 2 * k) + std::pow(cs, 2 * k);
    const double ap = 2.0 * k * std::pow(sn, k - 1) * std::pow(cs, k - 1) / D;
    const double Dp = 2 * k * sn * cs * (std::pow(sn, 2 * k - 2) - std::pow(cs, 2 * k - 2));
    return ap * ((k - 1) * (cs * cs - sn * sn) / (sn * cs) - Dp / D);
  };
  p.param_lo = 0.0;
  p.param_hi = kPi / 2;
  p.end_lo = 0.0;
  p.end_hi = kPi;
  return p;
}

ProfileFunction old_baby(int k) {
  const double ik2 = 1.0 / (k * k);
  auto psi = [ik2](double t) { return 2.0 * (1.0 + ik2) * t - 2.0 * ik2 * t * t - 1.0; };
  auto dpsi = [ik2](double t) { return 2.0 * (1.0 + ik2) - 4.0 * ik2 * t; };
  auto ddpsi = [ik2](double) { return -4.0 * ik2; };
  return arccos_of_cos2(psi, dpsi, ddpsi, "old_baby_k" + std::to_string(k), 0.0, kPi);
}

ProfileFunction winding() {
  ProfileFunction p;
  p.tag = "winding";
  p.value = [](double r) { return std::acos(1.0 - 2.0 / std::sqrt(r * r + 1.0)); };
  p.d1 = [](double r) {
    const double u = r * r + 1.0;
    const double ca = 1.0 - 2.0 / std::sqrt(u);
    const double sa = std::sqrt(std::max(0.0, 1.0 - ca * ca));
    return -2.0 * r / (std::pow(u, 1.5) * sa);
  };
  p.d2 = [](double r) {
    const double u = r * r + 1.0;
    const double ca = 1.0 - 2.0 / std::sqrt(u);
    const double sa = std::sqrt(std::max(0.0, 1.0 - ca * ca));
    const double dca = 2.0 * r / std::pow(u, 1.5);                    // d cos a / dr
    const double ddca = 2.0 / std::pow(u, 1.5) - 6.0 * r * r / std::pow(u, 2.5);
    const double ap = -dca / sa;
    // a'' = -(ddca + a'^2 cos a)/ sin a
    return -(ddca + ap * ap * ca) / sa;
  };
  p.param_lo = 0.0;
  p.param_hi = std::numeric_limits<double>::infinity();
  p.end_lo = kPi;
  p.end_hi = 0.0;
  return p;
}

ProfileFunction hopf() {
  ProfileFunction p;
  p.tag = "hopf";
  p.value = [](double s) { return 2.0 * s; };
  p.d1 = [](double) { return 2.0; };
  p.d2 = [](double) { return 0.0; };
  p.param_lo = 0.0;
  p.param_hi = kPi / 2;
  p.end_lo = 0.0;
  p.end_hi = kPi;
  return p;
}

ProfileFunction from_table(std::vector<double> s, std::vector<double> alpha,
                           const std::string& tag) {
  auto spline = std::make_shared<CubicSpline>(std::move(s), std::move(alpha));
  ProfileFunction p;
  p.kind = "tabulated";
  p.tag = tag;
  p.value = [spline](double t) { return (*spline)(t); };
  p.d1 = [spline](double t) { return spline->derivative(t); };
  p.d2 = [spline](double t) { return spline->second_derivative(t); };
  return p;
}

ProfileFunction composed(const ProfileFunction& alpha, std::function<double(double)> beta,
                         std::function<double(double)> beta_d1,
                         std::function<double(double)> beta_d2) {
  ProfileFunction p = alpha;
  p.tag = alpha.tag + "_reparam";
  auto av = alpha.value, a1 = alpha.d1, a2 = alpha.d2;
  p.value = [av, beta](double s) { return av(beta(s)); };
  p.d1 = [a1, beta, beta_d1](double s) { return a1(beta(s)) * beta_d1(s); };
  p.d2 = [a1, a2, beta, beta_d1, beta_d2](double s) {
    const double b = beta(s), b1 = beta_d1(s);
    return a2(b) * b1 * b1 + a1(b) * beta_d2(s);
  };
  return p;
}

}  // namespace profiles

}  // namespace hopfluid

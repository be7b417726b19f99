#include "hopfluid/potential.hpp"

#include <cmath>

namespace hopfluid {

double Potential::profile_value(double u3) const {
  const double u = std::clamp(u3, -1.0, 1.0);
  switch (family) {
    case PotentialFamily::Constant:
      return c;
    case PotentialFamily::OldNewBaby:
      return std::pow(1.0 - std::pow(u, a), b);
    case PotentialFamily::QuarticSixteenth: {
      const double t = 1.0 - u;
      return t * t * t * t / 16.0;
    }
    case PotentialFamily::ChargeDependent: {
      const double kk = k;
      const double s2 = std::max(0.0, 1.0 - u * u);
      const double S = std::pow(1.0 + u, 1.0 / kk) + std::pow(1.0 - u, 1.0 / kk);
      return std::pow(kk, 4) / 32.0 * std::pow(s2, 2.0 * (kk - 1.0) / kk) * std::pow(S, 4);
    }
  }
  throw Error("unknown potential family");
}

double Potential::profile_derivative(double u3) const {
  const double u = std::clamp(u3, -1.0, 1.0);
  switch (family) {
    case PotentialFamily::Constant:
      return 0.0;
    case PotentialFamily::OldNewBaby: {
      const double ua = std::pow(u, a);
      const double inner = 1.0 - ua;
      if (b == 1.0) return -a * std::pow(u, a - 1.0);
      return -b * std::pow(inner, b - 1.0) * a * std::pow(u, a - 1.0);
    }
    case PotentialFamily::QuarticSixteenth: {
      const double t = 1.0 - u;
      return -t * t * t / 4.0;
    }
    case PotentialFamily::ChargeDependent: {
      const double kk = k;
      const double s2 = 1.0 - u * u;
      if (s2 <= 0.0) return 0.0;  // C^1 limit at the poles for k >= 1
      const double beta = 2.0 * (kk - 1.0) / kk;
      const double S = std::pow(1.0 + u, 1.0 / kk) + std::pow(1.0 - u, 1.0 / kk);
      const double Sp = (std::pow(1.0 + u, 1.0 / kk - 1.0) - std::pow(1.0 - u, 1.0 / kk - 1.0)) / kk;
      const double pref = std::pow(kk, 4) / 32.0;
      return pref * (beta * std::pow(s2, beta - 1.0) * (-2.0 * u) * std::pow(S, 4) +
                     std::pow(s2, beta) * 4.0 * std::pow(S, 3) * Sp);
    }
  }
  throw Error("unknown potential family");
}

Vec3 Potential::gradient(const Vec3& y, double radius) const {
  const double u3 = y[2] / radius;
  const double dp = profile_derivative(u3);
  // Riemannian gradient of p(y3/R) on the sphere: (p'/R) * (e3 - (u3/R) y)
  Vec3 e3(0, 0, 1);
  return dp / radius * (e3 - (u3 / radius) * y);
}

std::string Potential::tag() const {
  switch (family) {
    case PotentialFamily::Constant:
      return "constant";
    case PotentialFamily::OldNewBaby:
      if (a == 1 && b == 1) return "old_baby";
      if (a == 2 && b == 1) return "new_baby";
      return "old_new_baby";
    case PotentialFamily::QuarticSixteenth:
      return "quartic_sixteenth";
    case PotentialFamily::ChargeDependent:
      return "charge_dependent";
  }
  return "unknown";
}

}  // namespace hopfluid

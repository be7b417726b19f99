#ifndef HOPFLUID_POTENTIAL_HPP
#define HOPFLUID_POTENTIAL_HPP

#include <string>

#include "hopfluid/chart.hpp"

namespace hopfluid {

enum class PotentialFamily {
  Constant,          // c
  OldNewBaby,        // (1 - u3^a)^b
  QuarticSixteenth,  // (1/16)(1 - u3)^4
  ChargeDependent,   // (k^4/32)(1-u3^2)^{2(k-1)/k} ((1+u3)^{1/k} + (1-u3)^{1/k})^4
};

/// Potential on the target sphere. All families are functions of the normalized
/// third component u3 = y3 / radius in [-1, 1], so a target of radius 1/2 sees
/// the same numbers as the unit sphere.
struct Potential {
  PotentialFamily family = PotentialFamily::Constant;
  double c = 0.0;
  double a = 1.0, b = 1.0;
  int k = 1;

  static Potential constant(double value) {
    Potential p;
    p.family = PotentialFamily::Constant;
    p.c = value;
    return p;
  }
  static Potential old_new_baby(double a, double b) {
    Potential p;
    p.family = PotentialFamily::OldNewBaby;
    p.a = a;
    p.b = b;
    return p;
  }
  static Potential old_baby() { return old_new_baby(1, 1); }
  static Potential new_baby() { return old_new_baby(2, 1); }
  static Potential quartic_sixteenth() {
    Potential p;
    p.family = PotentialFamily::QuarticSixteenth;
    return p;
  }
  static Potential charge_dependent(int k) {
    Potential p;
    p.family = PotentialFamily::ChargeDependent;
    p.k = k;
    return p;
  }

  double profile_value(double u3) const;       // p(u3)
  double profile_derivative(double u3) const;  // dp/du3

  double value(const Vec3& y, double radius) const { return profile_value(y[2] / radius); }

  /// Tangent gradient on the radius-R sphere at y.
  Vec3 gradient(const Vec3& y, double radius) const;

  std::string tag() const;
};

}  // namespace hopfluid

#endif

#ifndef HOPFLUID_CHART_HPP
#define HOPFLUID_CHART_HPP

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hopfluid/errors.hpp"

namespace hopfluid {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool half_infinite() const { return std::isinf(hi); }
  double width() const { return hi - lo; }
};

// Coordinate hyperplane {x[axis] == value} on which the metric degenerates.
struct SingularLocus {
  int axis = 0;
  double value = 0.0;
};

/// A single coordinate box with periodicity flags and a list of metric-degenerate
/// hyperplanes. `orientation` is the sign of the chart coordinate frame relative
/// to the manifold orientation: the volume form is orientation * sqrt(det g) dx0^dx1^dx2.
/// The (s, phi1, phi2) charts on the 3-sphere carry orientation -1 so that the
/// Hopf field has curl +2 and the Hopf map unit charge.
struct Chart {
  std::string name;
  std::array<std::string, 3> coords{{"x", "y", "z"}};
  std::array<Interval, 3> domain;
  std::array<bool, 3> periodic{{false, false, false}};
  double orientation = 1.0;
  std::vector<SingularLocus> singular_loci;

  bool contains(const Vec3& x) const {
    for (int i = 0; i < 3; ++i) {
      if (periodic[i]) continue;  // periodic coordinates wrap
      if (x[i] < domain[i].lo || x[i] > domain[i].hi) return false;
    }
    return true;
  }

  double singular_distance(const Vec3& x) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& loc : singular_loci) d = std::min(d, std::abs(x[loc.axis] - loc.value));
    return d;
  }

  void require_interior(const Vec3& x, double singular_tol = 1e-12) const {
    if (!contains(x)) throw OutOfDomainError(name + ": point outside chart box");
    if (singular_distance(x) <= singular_tol)
      throw SingularPointError(name + ": point on a singular locus");
  }
};

}  // namespace hopfluid

#endif

#ifndef HOPFLUID_DIFFOPS_HPP
#define HOPFLUID_DIFFOPS_HPP

#include <functional>

#include "hopfluid/metric.hpp"

namespace hopfluid {

/// Scalar function on a chart. `partials` is the optional closed-form coordinate
/// gradient (d_0 f, d_1 f, d_2 f); central differences are the fallback.
struct ScalarField {
  std::function<double(const Vec3&)> value;
  std::function<Vec3(const Vec3&)> partials;

  ScalarField() = default;
  explicit ScalarField(std::function<double(const Vec3&)> v) : value(std::move(v)) {}
  ScalarField(std::function<double(const Vec3&)> v, std::function<Vec3(const Vec3&)> p)
      : value(std::move(v)), partials(std::move(p)) {}
};

/// Vector field in the coordinate basis. Optional closed-form jacobian
/// J(i,j) = d_j V^i.
struct VectorFieldHandle {
  std::function<Vec3(const Vec3&)> components;
  std::function<Mat3(const Vec3&)> jacobian;

  VectorFieldHandle() = default;
  explicit VectorFieldHandle(std::function<Vec3(const Vec3&)> c) : components(std::move(c)) {}
  VectorFieldHandle(std::function<Vec3(const Vec3&)> c, std::function<Mat3(const Vec3&)> j)
      : components(std::move(c)), jacobian(std::move(j)) {}
};

/// Step for central differences along `axis`, scaled on half-infinite axes;
/// throws StepTooLarge when the stencil cannot stay inside the box.
double fd_step(const Chart& chart, const Vec3& x, int axis, double h = 1e-5);

Vec3 scalar_partials(const ScalarField& f, const Chart& chart, const Vec3& x);
Mat3 vector_jacobian(const VectorFieldHandle& V, const Chart& chart, const Vec3& x);

Vec3 grad(const ScalarField& f, const MetricSpec& spec, const Chart& chart, const Vec3& x);
double divergence(const VectorFieldHandle& V, const MetricSpec& spec, const Chart& chart,
                  const Vec3& x);
Vec3 curl(const VectorFieldHandle& V, const MetricSpec& spec, const Chart& chart, const Vec3& x);

/// Vector dual to a 2-form: V^i = orientation * eps^{ijk} w_{jk} / (2 sqrt(det g)),
/// i.e. the unique V with i_V nu_g = w. Input components in the coordinate cobasis.
Vec3 hodge_dual_vector(const Mat3& two_form, const MetricSpec& spec, const Chart& chart,
                       const Vec3& x);

/// Riemannian cross product, (A x B)^flat = i_B i_A nu_g.
Vec3 cross(const MetricSpec& spec, const Chart& chart, const Vec3& x, const Vec3& A,
           const Vec3& B);

/// Laplace-Beltrami of f evaluated directly from (1/sqrt g) d_i (sqrt g g^{ij} d_j f).
double laplace_beltrami(const ScalarField& f, const MetricSpec& spec, const Chart& chart,
                        const Vec3& x);

/// Covariant derivative (nabla_A B)^i = A^j d_j B^i + Gamma^i_{jk} A^j B^k.
Vec3 covariant_derivative(const VectorFieldHandle& B, const Vec3& A, const MetricSpec& spec,
                          const Chart& chart, const Vec3& x);

}  // namespace hopfluid

#endif

#ifndef HOPFLUID_FLUID_HPP
#define HOPFLUID_FLUID_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfluid/ansatz.hpp"

namespace hopfluid {

/// Velocity field with its Bernoulli function P and pressure p = P - |V|^2/2.
struct FlowField {
  VectorFieldHandle velocity;
  ScalarField bernoulli;
  ScalarField pressure;
  std::string provenance;
  SourceGeometry source;
};

/// V = (* phi^* omega)^sharp with P = Pbar o phi. V = lambda1 lambda2 U at
/// regular points and 0 at critical ones.
FlowField dual_flow(const AnsatzMap& map, const Potential& pot);

struct EulerCurlDefect {
  Vec3 momentum_defect;   // V x curl V - grad P
  double momentum_norm = 0.0;
  double div_defect = 0.0;
};

EulerCurlDefect euler_residual_curl_form(const FlowField& flow, const Vec3& x);

/// nabla_V V + grad p; agrees with the curl form for divergence-free fields.
Vec3 euler_residual_convective_form(const FlowField& flow, const Vec3& x);

/// V = f_-(cos^2 s) xi_- + f_+(cos^2 s) xi_+ on the round 3-sphere, with
/// p(cos^2 s) = 2 int_0^{cos^2 s} f_- f_+ dt. Derivative callbacks optional.
FlowField khesin_flow(std::function<double(double)> f_minus, std::function<double(double)> f_plus,
                      std::function<double(double)> df_minus = {},
                      std::function<double(double)> df_plus = {});

enum class BeltramiKind { Potential, Linear, Nonlinear, NotBeltrami };

struct BeltramiReport {
  BeltramiKind kind = BeltramiKind::NotBeltrami;
  double linear_constant = 0.0;             // f when kind == Linear
  std::vector<std::pair<Vec3, double>> proportionality_samples;
  double max_angle_defect = 0.0;            // radians
  double max_div = 0.0;
  std::string note;
};

/// Collinearity test of curl V against V over the samples. Fields whose
/// divergence exceeds 1e-6 are classified NotBeltrami with a note.
BeltramiReport beltrami_classify(const VectorFieldHandle& V, const MetricSpec& spec,
                                 const Chart& chart, const std::vector<Vec3>& samples);

/// Proportionality constant of a supplied linear Beltrami field (helper for mu1).
double measured_beltrami_constant(const VectorFieldHandle& V, const MetricSpec& spec,
                                  const Chart& chart, const std::vector<Vec3>& samples);

struct ForcedEulerResult {
  Vec3 force;            // kappa (div C_phi - grad |d phi|^2 / 2)
  Vec3 defect;           // nabla_V V + grad p - F
  double v_orthogonality = 0.0;  // g(F, V)
};

ForcedEulerResult forced_euler_check(const AnsatzMap& map, const Potential& pot, double kappa,
                                     const Vec3& x);

std::string to_string(BeltramiKind kind);

}  // namespace hopfluid

#endif

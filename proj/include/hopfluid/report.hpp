#ifndef HOPFLUID_REPORT_HPP
#define HOPFLUID_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfluid/fluid.hpp"
#include "hopfluid/topology.hpp"
#include "hopfluid/variational.hpp"

namespace hopfluid {

/// Minimal ordered JSON emitter; numbers carry 17 significant digits so reports
/// are byte-stable across runs.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array(const std::string& key);
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  template <typename T>
  JsonWriter& kv(const std::string& k, const T& v) {
    key(k);
    return value(v);
  }
  std::string str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

struct GateResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct BeltramiSummary {
  std::string classification;
  double constant = 0.0;
  double max_angle_defect = 0.0;
  double max_div = 0.0;
};

struct VerificationReport {
  std::string case_name;
  std::map<std::string, double> parameters;  // ordered, deterministic

  std::optional<EnergyBreakdown> energy;
  std::optional<double> flow_energy;      // int |V|^2 nu
  std::optional<double> expected_energy;  // registered closed form
  std::optional<double> energy_rel_error;

  std::optional<double> el_residual_sup;
  std::optional<double> euler_defect_sup;
  std::optional<double> convective_defect_sup;
  std::optional<double> div_defect_sup;
  std::optional<double> bernoulli_derivative_sup;
  std::optional<double> pressure_defect_sup;

  std::optional<ChargeResult> charge;
  std::optional<double> helicity_value;
  std::optional<double> helicity_charge_defect;

  std::optional<BeltramiSummary> beltrami;
  std::optional<BoundCheck> bound_sigma2;
  std::optional<BoundCheck> bound_mass_term;

  std::vector<GateResult> gates;
  bool pass = false;
  double timing_ms = 0.0;

  std::string to_json() const;
};

}  // namespace hopfluid

#endif

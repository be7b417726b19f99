#include "hopfluid/report.hpp"

#include <cmath>
#include <cstdio>

namespace hopfluid {

void JsonWriter::separator() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (!first_in_scope_.back()) out_ += ",";
    first_in_scope_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ += "{";
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += "}";
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& k) {
  key(k);
  pending_key_ = false;
  out_ += "[";
  first_in_scope_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += "]";
  first_in_scope_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separator();
  out_ += "\"" + k + "\":";
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separator();
  if (std::isnan(v)) {
    out_ += "null";
    return *this;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out_ += buf;
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  separator();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separator();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separator();
  out_ += "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out_ += '\\';
    out_ += c;
  }
  out_ += "\"";
  return *this;
}

namespace {

void write_bound(JsonWriter& w, const BoundCheck& b) {
  w.begin_object();
  w.kv("energy", b.energy);
  w.kv("charge_or_helicity", b.charge_or_helicity);
  if (b.has_constant)
    w.kv("bound_constant", b.bound_constant);
  else
    w.kv("bound_constant", "unspecified");
  w.kv("ratio", b.ratio);
  if (b.satisfied < 0)
    w.kv("satisfied", "ratio-only");
  else
    w.kv("satisfied", b.satisfied == 1);
  w.end_object();
}

}  // namespace

std::string VerificationReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.kv("schema", 1);
  w.kv("case", case_name);
  w.key("parameters");
  w.begin_object();
  for (const auto& [k, v] : parameters) w.kv(k, v);
  w.end_object();
  if (energy) {
    w.key("energy");
    w.begin_object();
    w.kv("sigma2_term", energy->sigma2_term);
    w.kv("potential_term", energy->potential_term);
    w.kv("dirichlet_term", energy->dirichlet_term);
    w.kv("kappa", energy->kappa);
    w.kv("total", energy->total);
    w.kv("quadrature_error_estimate", energy->quadrature_error_estimate);
    w.end_object();
  }
  if (flow_energy) w.kv("flow_energy", *flow_energy);
  if (expected_energy) w.kv("expected_energy", *expected_energy);
  if (energy_rel_error) w.kv("energy_rel_error", *energy_rel_error);
  if (el_residual_sup) w.kv("el_residual_sup", *el_residual_sup);
  if (euler_defect_sup) w.kv("euler_defect_sup", *euler_defect_sup);
  if (convective_defect_sup) w.kv("convective_defect_sup", *convective_defect_sup);
  if (div_defect_sup) w.kv("div_defect_sup", *div_defect_sup);
  if (bernoulli_derivative_sup) w.kv("bernoulli_derivative_sup", *bernoulli_derivative_sup);
  if (pressure_defect_sup) w.kv("pressure_defect_sup", *pressure_defect_sup);
  if (charge) {
    w.key("charge");
    w.begin_object();
    w.kv("raw_integral", charge->raw_integral);
    w.kv("rounded", charge->rounded);
    w.kv("defect", charge->defect);
    w.end_object();
  }
  if (helicity_value) w.kv("helicity", *helicity_value);
  if (helicity_charge_defect) w.kv("helicity_charge_defect", *helicity_charge_defect);
  if (beltrami) {
    w.key("beltrami");
    w.begin_object();
    w.kv("classification", beltrami->classification);
    w.kv("constant", beltrami->constant);
    w.kv("max_angle_defect", beltrami->max_angle_defect);
    w.kv("max_div", beltrami->max_div);
    w.end_object();
  }
  if (bound_sigma2) {
    w.key("bound_sigma2");
    write_bound(w, *bound_sigma2);
  }
  if (bound_mass_term) {
    w.key("bound_mass_term");
    write_bound(w, *bound_mass_term);
  }
  w.begin_array("gates");
  for (const auto& g : gates) {
    w.begin_object();
    w.kv("name", g.name);
    w.kv("measured", g.measured);
    w.kv("tolerance", g.tolerance);
    w.kv("pass", g.pass);
    w.end_object();
  }
  w.end_array();
  w.kv("pass", pass);
  w.kv("timing_ms", timing_ms);
  w.end_object();
  return w.str();
}

}  // namespace hopfluid

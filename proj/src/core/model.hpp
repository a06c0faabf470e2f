#pragma once

#include <array>
#include <string_view>

#include "core/rng.hpp"

namespace vesselmc {

// A normally distributed design variable in SI units (Pa for pressures
// and strengths, m for diameters). std_dev == 0 denotes a deterministic
// variable.
struct NormalVariable {
  double mean = 0.0;
  double std_dev = 0.0;

  // Throws ValidationError naming `label` unless mean and std_dev are
  // finite and std_dev >= 0.
  void validate(std::string_view label) const;
};

// One realized draw of the five design variables. Fields are finite by
// construction; physical admissibility (d_o > d_i, ...) is judged by the
// burst criteria.
struct DesignSample {
  double p_o;  // operating pressure, Pa
  double s_y;  // yield strength, Pa
  double s_u;  // ultimate strength, Pa
  double d_o;  // outer diameter, m
  double d_i;  // inner diameter, m
};

// Full stochastic description of the vessel.
struct VesselModel {
  NormalVariable operating_pressure;
  NormalVariable yield_strength;
  NormalVariable ultimate_strength;
  NormalVariable outer_diameter;
  NormalVariable inner_diameter;

  // Member invariants plus the cross-field ones:
  // d_o.mean > d_i.mean > 0, s_u.mean >= s_y.mean > 0, p_o.mean > 0.
  void validate() const;

  // The sample at the variable means (no randomness).
  DesignSample means() const;
};

// Identifies one VesselModel field, for sweeps, sensitivities and config.
enum class VariableId {
  OperatingPressure,
  YieldStrength,
  UltimateStrength,
  OuterDiameter,
  InnerDiameter,
};

inline constexpr std::array<VariableId, 5> kAllVariables = {
    VariableId::OperatingPressure, VariableId::YieldStrength,
    VariableId::UltimateStrength, VariableId::OuterDiameter,
    VariableId::InnerDiameter,
};

// Canonical lowercase name used in config files and CSV columns.
std::string_view variable_name(VariableId id);

// Display-unit conversion for a variable: pressures and strengths render
// in MPa, diameters in mm. to_display(si) and from_display are exact
// inverses to well past 10 significant digits.
double to_display_unit(VariableId id, double si_value);
double from_display_unit(VariableId id, double display_value);
std::string_view display_unit_name(VariableId id);  // "mpa" or "mm"

NormalVariable& variable(VesselModel& model, VariableId id);
const NormalVariable& variable(const VesselModel& model, VariableId id);

// One variate of v by inverse-transform sampling: mean + std_dev *
// quantile(u). Always consumes exactly one uniform, even for std_dev == 0,
// so downstream draw order is independent of which variables are
// deterministic.
double sample_normal(const NormalVariable& v, RngStream& stream);

// Draws the five variables independently in the fixed order
// (p_o, s_y, s_u, d_o, d_i), consuming exactly five uniforms.
DesignSample sample_design(const VesselModel& model, RngStream& stream);

}  // namespace vesselmc

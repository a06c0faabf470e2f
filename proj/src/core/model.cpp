#include "core/model.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/normal.hpp"

namespace vesselmc {

void NormalVariable::validate(std::string_view label) const {
  if (!std::isfinite(mean)) {
    throw ValidationError(std::string(label) + ": mean must be finite");
  }
  if (!std::isfinite(std_dev) || std_dev < 0.0) {
    throw ValidationError(std::string(label) +
                          ": std_dev must be finite and >= 0");
  }
}

void VesselModel::validate() const {
  operating_pressure.validate("operating_pressure");
  yield_strength.validate("yield_strength");
  ultimate_strength.validate("ultimate_strength");
  outer_diameter.validate("outer_diameter");
  inner_diameter.validate("inner_diameter");
  if (!(inner_diameter.mean > 0.0)) {
    throw ValidationError("inner_diameter: mean must be > 0");
  }
  if (!(outer_diameter.mean > inner_diameter.mean)) {
    throw ValidationError(
        "outer_diameter: mean must exceed inner_diameter mean");
  }
  if (!(yield_strength.mean > 0.0)) {
    throw ValidationError("yield_strength: mean must be > 0");
  }
  if (!(ultimate_strength.mean >= yield_strength.mean)) {
    throw ValidationError(
        "ultimate_strength: mean must be >= yield_strength mean");
  }
  if (!(operating_pressure.mean > 0.0)) {
    throw ValidationError("operating_pressure: mean must be > 0");
  }
}

DesignSample VesselModel::means() const {
  return DesignSample{operating_pressure.mean, yield_strength.mean,
                      ultimate_strength.mean, outer_diameter.mean,
                      inner_diameter.mean};
}

std::string_view variable_name(VariableId id) {
  switch (id) {
    case VariableId::OperatingPressure: return "operating_pressure";
    case VariableId::YieldStrength: return "yield_strength";
    case VariableId::UltimateStrength: return "ultimate_strength";
    case VariableId::OuterDiameter: return "outer_diameter";
    case VariableId::InnerDiameter: return "inner_diameter";
  }
  return "?";
}

namespace {

bool is_geometric(VariableId id) {
  return id == VariableId::OuterDiameter || id == VariableId::InnerDiameter;
}

}  // namespace

double to_display_unit(VariableId id, double si_value) {
  return is_geometric(id) ? si_value * 1e3 : si_value / 1e6;
}

double from_display_unit(VariableId id, double display_value) {
  return is_geometric(id) ? display_value / 1e3 : display_value * 1e6;
}

std::string_view display_unit_name(VariableId id) {
  return is_geometric(id) ? "mm" : "mpa";
}

NormalVariable& variable(VesselModel& model, VariableId id) {
  switch (id) {
    case VariableId::OperatingPressure: return model.operating_pressure;
    case VariableId::YieldStrength: return model.yield_strength;
    case VariableId::UltimateStrength: return model.ultimate_strength;
    case VariableId::OuterDiameter: return model.outer_diameter;
    case VariableId::InnerDiameter: return model.inner_diameter;
  }
  throw DomainError("variable: unknown VariableId");
}

const NormalVariable& variable(const VesselModel& model, VariableId id) {
  return variable(const_cast<VesselModel&>(model), id);
}

double sample_normal(const NormalVariable& v, RngStream& stream) {
  const double u = stream.next_uniform();
  return v.mean + v.std_dev * standard_normal_quantile(u);
}

DesignSample sample_design(const VesselModel& model, RngStream& stream) {
  DesignSample s;
  s.p_o = sample_normal(model.operating_pressure, stream);
  s.s_y = sample_normal(model.yield_strength, stream);
  s.s_u = sample_normal(model.ultimate_strength, stream);
  s.d_o = sample_normal(model.outer_diameter, stream);
  s.d_i = sample_normal(model.inner_diameter, stream);
  return s;
}

}  // namespace vesselmc

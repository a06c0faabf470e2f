#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/analysis.hpp"

namespace vesselmc {

struct SweepSpec {
  VariableId variable;
  double lo_si;
  double hi_si;
  int steps;
};

struct SensitivitySpec {
  std::vector<VariableId> variables;
  double delta_cov;
  PerturbMode mode = PerturbMode::Mean;
};

// A parsed study configuration. The JSON document carries Table-2-style
// display units (MPa, mm); everything here is already SI.
struct StudyConfig {
  VesselModel model;
  std::vector<Criterion> criteria;
  RunConfig run;
  std::optional<SweepSpec> sweep;
  std::optional<SensitivitySpec> sensitivity;
};

// Strict parsing: unknown keys are rejected, every diagnostic names the
// offending field. Throws ParseError for malformed JSON, ValidationError
// for invariant violations, ConfigError for unknown names.
StudyConfig parse_config_text(const std::string& text);

// Reads the file and delegates to parse_config_text. Throws IoError when
// the file cannot be read.
StudyConfig parse_config_file(const std::string& path);

}  // namespace vesselmc

#include "core/study.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace vesselmc {

namespace {

using nlohmann::json;

std::string joined_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> known) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (item.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError(joined_path(path, item.key()) + ": unknown key");
    }
  }
}

const json& require_key(const json& obj, const std::string& path,
                        const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(path + ": missing required key '" + key + "'");
  }
  return *it;
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) {
    throw ValidationError(path + ": expected an object");
  }
  return v;
}

double require_finite_number(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw ValidationError(path + ": expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw ValidationError(path + ": must be finite");
  }
  return d;
}

std::uint64_t require_positive_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.is_number_float()) {
    throw ValidationError(path + ": expected an integer");
  }
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u >= 1) return u;
  } else if (v.get<std::int64_t>() >= 1) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ValidationError(path + ": must be >= 1");
}

NormalVariable parse_variable(const json& obj, const std::string& path,
                              const char* mean_key, const char* std_key,
                              double to_si) {
  require_object(obj, path);
  reject_unknown_keys(obj, path, {mean_key, std_key});
  NormalVariable v;
  v.mean =
      require_finite_number(require_key(obj, path, mean_key), joined_path(path, mean_key)) * to_si;
  v.std_dev =
      require_finite_number(require_key(obj, path, std_key), joined_path(path, std_key)) * to_si;
  if (v.std_dev < 0.0) {
    throw ValidationError(joined_path(path, std_key) + ": must be >= 0");
  }
  return v;
}

std::string valid_names_hint() {
  std::string hint = "(valid:";
  for (Criterion c : kAllCriteria) {
    hint += " ";
    hint += criterion_name(c);
  }
  return hint + ")";
}

Criterion parse_criterion(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw ValidationError(path + ": expected a criterion name string");
  }
  const auto name = v.get<std::string>();
  const auto c = criterion_from_name(name);
  if (!c) {
    throw ConfigError(path + ": unknown criterion '" + name + "' " +
                      valid_names_hint());
  }
  return *c;
}

VariableId parse_variable_id(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw ValidationError(path + ": expected a variable name string");
  }
  const auto name = v.get<std::string>();
  for (VariableId id : kAllVariables) {
    if (variable_name(id) == name) return id;
  }
  std::string hint = "(valid:";
  for (VariableId id : kAllVariables) {
    hint += " ";
    hint += variable_name(id);
  }
  throw ConfigError(path + ": unknown variable '" + name + "' " + hint + ")");
}

VesselModel parse_model(const json& obj, const std::string& path) {
  require_object(obj, path);
  reject_unknown_keys(obj, path,
                      {"operating_pressure", "yield_strength",
                       "ultimate_strength", "outer_diameter",
                       "inner_diameter"});
  VesselModel m;
  m.operating_pressure =
      parse_variable(require_key(obj, path, "operating_pressure"),
                     joined_path(path, "operating_pressure"), "mean_mpa",
                     "std_mpa", 1e6);
  m.yield_strength =
      parse_variable(require_key(obj, path, "yield_strength"),
                     joined_path(path, "yield_strength"), "mean_mpa",
                     "std_mpa", 1e6);
  m.ultimate_strength =
      parse_variable(require_key(obj, path, "ultimate_strength"),
                     joined_path(path, "ultimate_strength"), "mean_mpa",
                     "std_mpa", 1e6);
  m.outer_diameter =
      parse_variable(require_key(obj, path, "outer_diameter"),
                     joined_path(path, "outer_diameter"), "mean_mm", "std_mm",
                     1e-3);
  m.inner_diameter =
      parse_variable(require_key(obj, path, "inner_diameter"),
                     joined_path(path, "inner_diameter"), "mean_mm", "std_mm",
                     1e-3);
  try {
    m.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(path + "." + e.what());
  }
  return m;
}

SweepSpec parse_sweep(const json& obj) {
  require_object(obj, "sweep");
  reject_unknown_keys(obj, "sweep", {"variable", "lo", "hi", "steps"});
  SweepSpec spec;
  spec.variable =
      parse_variable_id(require_key(obj, "sweep", "variable"), "sweep.variable");
  // lo/hi arrive in the variable's display unit (MPa or mm).
  const double lo =
      require_finite_number(require_key(obj, "sweep", "lo"), "sweep.lo");
  const double hi =
      require_finite_number(require_key(obj, "sweep", "hi"), "sweep.hi");
  spec.lo_si = from_display_unit(spec.variable, lo);
  spec.hi_si = from_display_unit(spec.variable, hi);
  if (lo < 0.0 || !(lo < hi)) {
    throw ValidationError("sweep: require 0 <= lo < hi");
  }
  const auto steps =
      require_positive_integer(require_key(obj, "sweep", "steps"), "sweep.steps");
  if (steps < 2 || steps > 100000) {
    throw ValidationError("sweep.steps: must be between 2 and 100000");
  }
  spec.steps = static_cast<int>(steps);
  return spec;
}

SensitivitySpec parse_sensitivity(const json& obj) {
  require_object(obj, "sensitivity");
  reject_unknown_keys(obj, "sensitivity", {"variables", "delta_cov", "mode"});
  SensitivitySpec spec;
  const json& vars = require_key(obj, "sensitivity", "variables");
  if (!vars.is_array() || vars.empty()) {
    throw ValidationError("sensitivity.variables: expected a nonempty array");
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const VariableId id = parse_variable_id(
        vars[i], "sensitivity.variables[" + std::to_string(i) + "]");
    for (VariableId seen : spec.variables) {
      if (seen == id) {
        throw ConfigError("sensitivity.variables: duplicate variable '" +
                          std::string(variable_name(id)) + "'");
      }
    }
    spec.variables.push_back(id);
  }
  spec.delta_cov = require_finite_number(
      require_key(obj, "sensitivity", "delta_cov"), "sensitivity.delta_cov");
  if (!(spec.delta_cov > 0.0)) {
    throw ValidationError("sensitivity.delta_cov: must be > 0");
  }
  if (auto it = obj.find("mode"); it != obj.end()) {
    if (!it->is_string()) {
      throw ValidationError("sensitivity.mode: expected a string");
    }
    const auto mode = it->get<std::string>();
    if (mode == "mean") {
      spec.mode = PerturbMode::Mean;
    } else if (mode == "std_dev") {
      spec.mode = PerturbMode::StdDev;
    } else {
      throw ConfigError("sensitivity.mode: unknown mode '" + mode +
                        "' (valid: mean std_dev)");
    }
  }
  return spec;
}

}  // namespace

StudyConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  require_object(doc, "<config>");
  reject_unknown_keys(doc, "",
                      {"model", "criteria", "trials", "seed", "chunk_size",
                       "trace_points", "sweep", "sensitivity"});

  StudyConfig cfg;
  cfg.model = parse_model(require_key(doc, "<config>", "model"), "model");

  const json& criteria = require_key(doc, "<config>", "criteria");
  if (!criteria.is_array() || criteria.empty()) {
    throw ValidationError("criteria: expected a nonempty array");
  }
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion c =
        parse_criterion(criteria[i], "criteria[" + std::to_string(i) + "]");
    for (Criterion seen : cfg.criteria) {
      if (seen == c) {
        throw ConfigError("criteria: duplicate criterion '" +
                          std::string(criterion_name(c)) + "'");
      }
    }
    cfg.criteria.push_back(c);
  }

  if (auto it = doc.find("trials"); it != doc.end()) {
    cfg.run.trials = require_positive_integer(*it, "trials");
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    const bool nonnegative_integer =
        it->is_number_unsigned() ||
        (it->is_number_integer() && it->get<std::int64_t>() >= 0);
    if (!nonnegative_integer) {
      throw ValidationError("seed: expected a nonnegative integer");
    }
    cfg.run.seed = it->get<std::uint64_t>();
  }
  if (auto it = doc.find("chunk_size"); it != doc.end()) {
    const auto v = require_positive_integer(*it, "chunk_size");
    if (v > (1u << 24)) {
      throw ValidationError("chunk_size: must be <= 2^24");
    }
    cfg.run.chunk_size = static_cast<std::uint32_t>(v);
  }
  if (auto it = doc.find("trace_points"); it != doc.end()) {
    const auto v = require_positive_integer(*it, "trace_points");
    if (v > 100000) {
      throw ValidationError("trace_points: must be <= 100000");
    }
    cfg.run.trace_points = static_cast<std::uint32_t>(v);
  }
  if (auto it = doc.find("sweep"); it != doc.end()) {
    cfg.sweep = parse_sweep(*it);
  }
  if (auto it = doc.find("sensitivity"); it != doc.end()) {
    cfg.sensitivity = parse_sensitivity(*it);
  }
  return cfg;
}

StudyConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read config file: " + path);
  }
  return parse_config_text(buf.str());
}

}  // namespace vesselmc

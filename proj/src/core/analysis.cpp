#include "core/analysis.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace vesselmc {

double cov(const NormalVariable& v) {
  if (v.mean == 0.0) {
    throw DomainError("cov: mean must be nonzero");
  }
  return v.std_dev / v.mean;
}

SweepResult sweep_std(const VesselModel& model, Criterion c, VariableId var,
                      double lo, double hi, int steps, const RunConfig& cfg) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || !(lo < hi)) {
    throw ValidationError("sweep_std: require 0 <= lo < hi");
  }
  if (steps < 2) {
    throw ValidationError("sweep_std: steps must be >= 2");
  }

  SweepResult result{c, var, {}};
  result.points.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double sd = lo + (hi - lo) * static_cast<double>(k) /
                               static_cast<double>(steps - 1);
    VesselModel point_model = model;
    variable(point_model, var).std_dev = sd;
    const EstimateResult est = estimate_pof(point_model, c, cfg);
    result.points.push_back({sd, est.pof, est.std_error});
  }
  return result;
}

namespace {

VesselModel perturbed_model(const VesselModel& model, VariableId var,
                            double delta_x, PerturbMode mode) {
  VesselModel out = model;
  NormalVariable& v = variable(out, var);
  if (mode == PerturbMode::Mean) {
    v.mean += delta_x;
  } else {
    v.std_dev += delta_x;
  }
  return out;
}

SensitivityResult make_result(Criterion c, VariableId var, PerturbMode mode,
                              double base_pof, double perturbed_pof,
                              double delta_cov, double delta_x) {
  SensitivityResult r;
  r.criterion = c;
  r.variable = var;
  r.mode = mode;
  r.base_pof = base_pof;
  r.perturbed_pof = perturbed_pof;
  r.pof_increment = perturbed_pof - base_pof;
  r.delta_cov = delta_cov;
  r.delta_x_si = delta_x;
  r.coefficient_si = r.pof_increment / delta_x;
  return r;
}

double perturbation_step(const VesselModel& model, VariableId var,
                         double delta_cov) {
  if (!(delta_cov > 0.0) || !std::isfinite(delta_cov)) {
    throw DomainError("sensitivity: delta_cov must be > 0");
  }
  const double mean = variable(model, var).mean;
  if (mean == 0.0) {
    throw DomainError(std::string("sensitivity: mean of ") +
                      std::string(variable_name(var)) + " is 0");
  }
  return delta_cov * mean;
}

}  // namespace

SensitivityResult sensitivity(const VesselModel& model, Criterion c,
                              VariableId var, double delta_cov,
                              const RunConfig& cfg, PerturbMode mode) {
  const double delta_x = perturbation_step(model, var, delta_cov);
  const EstimateResult base = estimate_pof(model, c, cfg);
  const EstimateResult pert =
      estimate_pof(perturbed_model(model, var, delta_x, mode), c, cfg);
  return make_result(c, var, mode, base.pof, pert.pof, delta_cov, delta_x);
}

std::vector<SensitivityResult> sensitivity_all(
    const VesselModel& model, std::span<const Criterion> criteria,
    std::span<const VariableId> vars, double delta_cov, const RunConfig& cfg,
    PerturbMode mode) {
  if (criteria.empty() || vars.empty()) {
    throw ConfigError("sensitivity_all: criteria and variables must be nonempty");
  }

  // One base run and one perturbed run per variable cover the whole grid;
  // results match per-cell sensitivity() calls because the sample stream
  // does not depend on the criteria list.
  const CriterionEstimates base = estimate_all(model, criteria, cfg);
  std::vector<SensitivityResult> grid;
  grid.reserve(criteria.size() * vars.size());
  for (std::size_t vi = 0; vi < vars.size(); ++vi) {
    const double delta_x = perturbation_step(model, vars[vi], delta_cov);
    const CriterionEstimates pert = estimate_all(
        perturbed_model(model, vars[vi], delta_x, mode), criteria, cfg);
    for (std::size_t k = 0; k < criteria.size(); ++k) {
      grid.push_back(make_result(criteria[k], vars[vi], mode,
                                 base[k].second.pof, pert[k].second.pof,
                                 delta_cov, delta_x));
    }
  }
  return grid;
}

}  // namespace vesselmc

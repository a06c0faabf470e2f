#pragma once

#include <span>
#include <vector>

#include "core/engine.hpp"

namespace vesselmc {

// Coefficient of variation std_dev / mean. Throws DomainError when
// mean == 0.
double cov(const NormalVariable& v);

struct SweepPoint {
  double std_dev_si;  // the standard deviation this point was run at
  double pof;
  double std_error;
};

// Failure probability as a function of one variable's standard deviation,
// all other inputs per the base model.
struct SweepResult {
  Criterion criterion;
  VariableId variable;
  std::vector<SweepPoint> points;  // strictly increasing in std_dev_si
};

// Re-estimates pof at `steps` evenly spaced standard deviations from lo to
// hi (SI units), replacing only var's std_dev. Every point reuses the same
// seed family (common random numbers), so a point whose std_dev equals the
// model's own reproduces estimate_pof bit for bit.
//
// Requires 0 <= lo < hi and steps >= 2.
SweepResult sweep_std(const VesselModel& model, Criterion c, VariableId var,
                      double lo, double hi, int steps, const RunConfig& cfg);

// Which parameter of the variable the COV increment perturbs. The mean is
// the default; the standard-deviation mode is an optional alternative
// reading of the same increment.
enum class PerturbMode { Mean, StdDev };

// One finite-difference sensitivity coefficient.
struct SensitivityResult {
  Criterion criterion;
  VariableId variable;
  PerturbMode mode;
  double base_pof;
  double perturbed_pof;
  double pof_increment;   // perturbed_pof - base_pof, signed
  double delta_cov;       // the COV increment applied
  double delta_x_si;      // delta_cov * base mean, SI units
  double coefficient_si;  // pof_increment / delta_x_si, per Pa or per m
};

// Perturbs var by delta_x = delta_cov * mean (applied to the mean by
// default, or to the std_dev in the alternative mode), re-estimates pof
// with common random numbers, and returns the signed finite-difference
// coefficient. Throws DomainError when delta_cov <= 0 or the variable's
// mean is 0.
SensitivityResult sensitivity(const VesselModel& model, Criterion c,
                              VariableId var, double delta_cov,
                              const RunConfig& cfg,
                              PerturbMode mode = PerturbMode::Mean);

// Full criterion x variable grid sharing one seed family. Base and
// perturbed runs are evaluated once per variable across all criteria, so
// every cell equals the corresponding sensitivity() call.
std::vector<SensitivityResult> sensitivity_all(
    const VesselModel& model, std::span<const Criterion> criteria,
    std::span<const VariableId> vars, double delta_cov, const RunConfig& cfg,
    PerturbMode mode = PerturbMode::Mean);

}  // namespace vesselmc

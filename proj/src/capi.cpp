// extern "C" surface of the shared library. Exceptions from the core are
// caught here and mapped onto status codes plus a thread-local message.

#include "vesselmc/vesselmc.h"

#include <cmath>
#include <string>

#include "core/analysis.hpp"
#include "core/criteria.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/model.hpp"
#include "core/normal.hpp"
#include "core/report.hpp"
#include "core/study.hpp"

namespace {

thread_local std::string t_last_error;

void clear_error() { t_last_error.clear(); }

vmc_status fail(vmc_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

vmc_status fail_argument(const char* message) {
  return fail(VMC_ERR_ARGUMENT, message);
}

// Runs `fn` and maps core exceptions to status codes.
template <typename Fn>
vmc_status guarded(Fn&& fn) {
  clear_error();
  try {
    return fn();
  } catch (const vesselmc::DomainError& e) {
    return fail(VMC_ERR_DOMAIN, e.what());
  } catch (const vesselmc::ParseError& e) {
    return fail(VMC_ERR_PARSE, e.what());
  } catch (const vesselmc::ValidationError& e) {
    return fail(VMC_ERR_VALIDATION, e.what());
  } catch (const vesselmc::ConfigError& e) {
    return fail(VMC_ERR_CONFIG, e.what());
  } catch (const vesselmc::IoError& e) {
    return fail(VMC_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(VMC_ERR_ARGUMENT, e.what());
  }
}

bool criterion_in_range(vmc_criterion c) {
  return c >= 0 && c < VMC_CRITERION_COUNT;
}

vesselmc::Criterion to_core(vmc_criterion c) {
  return vesselmc::kAllCriteria[static_cast<std::size_t>(c)];
}

vmc_sample_flag to_flag(vesselmc::InvalidReason reason) {
  switch (reason) {
    case vesselmc::InvalidReason::NonPositiveWall:
      return VMC_SAMPLE_NONPOSITIVE_WALL;
    case vesselmc::InvalidReason::NonPositiveGeometry:
      return VMC_SAMPLE_NONPOSITIVE_GEOMETRY;
    case vesselmc::InvalidReason::InvalidMaterial:
      return VMC_SAMPLE_INVALID_MATERIAL;
  }
  return VMC_SAMPLE_INVALID_MATERIAL;
}

vesselmc::VesselModel make_model(const double means[5],
                                 const double std_devs[5]) {
  vesselmc::VesselModel model;
  for (std::size_t i = 0; i < vesselmc::kAllVariables.size(); ++i) {
    vesselmc::NormalVariable& v =
        vesselmc::variable(model, vesselmc::kAllVariables[i]);
    v.mean = means[i];
    v.std_dev = std_devs[i];
  }
  return model;
}

}  // namespace

struct vmc_model {
  vesselmc::VesselModel model;
};

struct vmc_study {
  vesselmc::StudyConfig config;
};

struct vmc_report {
  vesselmc::Report report;
};

namespace {

template <vesselmc::Report (*Runner)(const vesselmc::StudyConfig&)>
vmc_status run_command(const vmc_study* study, vmc_report** out,
                       const char* what) {
  if (study == nullptr || out == nullptr) {
    return fail(VMC_ERR_ARGUMENT, std::string(what) + ": null argument");
  }
  return guarded([&] {
    *out = new vmc_report{Runner(study->config)};
    return VMC_OK;
  });
}

}  // namespace

extern "C" {

const char* vmc_version(void) { return "0.1.0"; }

const char* vmc_status_name(vmc_status status) {
  switch (status) {
    case VMC_OK: return "ok";
    case VMC_ERR_ARGUMENT: return "argument_error";
    case VMC_ERR_DOMAIN: return "domain_error";
    case VMC_ERR_PARSE: return "parse_error";
    case VMC_ERR_VALIDATION: return "validation_error";
    case VMC_ERR_CONFIG: return "config_error";
    case VMC_ERR_IO: return "io_error";
  }
  return "unknown";
}

const char* vmc_last_error(void) { return t_last_error.c_str(); }

const char* vmc_criterion_name(vmc_criterion c) {
  if (!criterion_in_range(c)) return nullptr;
  return vesselmc::criterion_name(to_core(c)).data();
}

vmc_status vmc_criterion_from_name(const char* name, vmc_criterion* out) {
  clear_error();
  if (name == nullptr || out == nullptr) {
    return fail_argument("vmc_criterion_from_name: null argument");
  }
  const auto c = vesselmc::criterion_from_name(name);
  if (!c) {
    return fail(VMC_ERR_CONFIG,
                std::string("unknown criterion '") + name +
                    "' (valid: faupel svensson christopher zheng brabin)");
  }
  *out = static_cast<vmc_criterion>(
      static_cast<int>(*c));  // enumerators share the canonical order
  return VMC_OK;
}

vmc_status vmc_normal_quantile(double p, double* out) {
  if (out == nullptr) return fail_argument("vmc_normal_quantile: null out");
  return guarded([&] {
    *out = vesselmc::standard_normal_quantile(p);
    return VMC_OK;
  });
}

vmc_status vmc_normal_cdf(double z, double* out) {
  if (out == nullptr) return fail_argument("vmc_normal_cdf: null out");
  return guarded([&] {
    *out = vesselmc::standard_normal_cdf(z);
    return VMC_OK;
  });
}

vmc_status vmc_strain_hardening_exponent(double s_y, double s_u, double* out) {
  if (out == nullptr) {
    return fail_argument("vmc_strain_hardening_exponent: null out");
  }
  return guarded([&] {
    *out = vesselmc::strain_hardening_exponent(s_y, s_u);
    return VMC_OK;
  });
}

vmc_status vmc_burst_pressure(vmc_criterion c, double p_o, double s_y,
                              double s_u, double d_o, double d_i,
                              double* out_pa, vmc_sample_flag* flag) {
  if (out_pa == nullptr || flag == nullptr) {
    return fail_argument("vmc_burst_pressure: null output");
  }
  if (!criterion_in_range(c)) {
    return fail_argument("vmc_burst_pressure: criterion out of range");
  }
  return guarded([&] {
    const vesselmc::BurstResult r = vesselmc::burst_pressure(
        to_core(c), vesselmc::DesignSample{p_o, s_y, s_u, d_o, d_i});
    if (r.is_valid()) {
      *out_pa = r.value_pa();
      *flag = VMC_SAMPLE_VALID;
    } else {
      *out_pa = std::nan("");
      *flag = to_flag(r.reason());
    }
    return VMC_OK;
  });
}

vmc_status vmc_model_create(const double means[5], const double std_devs[5],
                            vmc_model** out) {
  if (means == nullptr || std_devs == nullptr || out == nullptr) {
    return fail_argument("vmc_model_create: null argument");
  }
  return guarded([&] {
    vesselmc::VesselModel model = make_model(means, std_devs);
    model.validate();
    *out = new vmc_model{model};
    return VMC_OK;
  });
}

void vmc_model_free(vmc_model* model) { delete model; }

vmc_status vmc_burst_at_means(const vmc_model* model, vmc_criterion c,
                              double* out_pa, vmc_sample_flag* flag) {
  if (model == nullptr || out_pa == nullptr || flag == nullptr) {
    return fail_argument("vmc_burst_at_means: null argument");
  }
  if (!criterion_in_range(c)) {
    return fail_argument("vmc_burst_at_means: criterion out of range");
  }
  return guarded([&] {
    const vesselmc::BurstResult r =
        vesselmc::burst_at_means(to_core(c), model->model);
    if (r.is_valid()) {
      *out_pa = r.value_pa();
      *flag = VMC_SAMPLE_VALID;
    } else {
      *out_pa = std::nan("");
      *flag = to_flag(r.reason());
    }
    return VMC_OK;
  });
}

vmc_status vmc_estimate_pof(const vmc_model* model, vmc_criterion c,
                            uint64_t trials, uint64_t seed, int threads,
                            vmc_estimate* out) {
  if (model == nullptr || out == nullptr) {
    return fail_argument("vmc_estimate_pof: null argument");
  }
  if (!criterion_in_range(c)) {
    return fail_argument("vmc_estimate_pof: criterion out of range");
  }
  return guarded([&] {
    vesselmc::RunConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads > 0 ? threads : 0;
    const vesselmc::EstimateResult r =
        vesselmc::estimate_pof(model->model, to_core(c), cfg);
    out->pof = r.pof;
    out->reliability = r.reliability;
    out->std_error = r.std_error;
    out->trials = r.trials;
    out->failures = r.failures;
    out->invalid_samples = r.invalid_samples;
    return VMC_OK;
  });
}

vmc_status vmc_study_parse_file(const char* path, vmc_study** out) {
  if (path == nullptr || out == nullptr) {
    return fail_argument("vmc_study_parse_file: null argument");
  }
  return guarded([&] {
    *out = new vmc_study{vesselmc::parse_config_file(path)};
    return VMC_OK;
  });
}

vmc_status vmc_study_parse_text(const char* json_text, vmc_study** out) {
  if (json_text == nullptr || out == nullptr) {
    return fail_argument("vmc_study_parse_text: null argument");
  }
  return guarded([&] {
    *out = new vmc_study{vesselmc::parse_config_text(json_text)};
    return VMC_OK;
  });
}

void vmc_study_free(vmc_study* study) { delete study; }

vmc_status vmc_study_set_seed(vmc_study* study, uint64_t seed) {
  clear_error();
  if (study == nullptr) return fail_argument("vmc_study_set_seed: null study");
  study->config.run.seed = seed;
  return VMC_OK;
}

vmc_status vmc_study_set_trials(vmc_study* study, uint64_t trials) {
  clear_error();
  if (study == nullptr) {
    return fail_argument("vmc_study_set_trials: null study");
  }
  if (trials < 1) {
    return fail(VMC_ERR_VALIDATION, "trials must be >= 1");
  }
  study->config.run.trials = trials;
  return VMC_OK;
}

vmc_status vmc_study_set_threads(vmc_study* study, int threads) {
  clear_error();
  if (study == nullptr) {
    return fail_argument("vmc_study_set_threads: null study");
  }
  if (threads < 0) {
    return fail(VMC_ERR_VALIDATION, "threads must be >= 0");
  }
  study->config.run.threads = threads;
  return VMC_OK;
}

vmc_status vmc_study_run_burst(const vmc_study* study, vmc_report** out) {
  return run_command<vesselmc::run_burst>(study, out, "vmc_study_run_burst");
}

vmc_status vmc_study_run_estimate(const vmc_study* study, vmc_report** out) {
  return run_command<vesselmc::run_estimate>(study, out,
                                             "vmc_study_run_estimate");
}

vmc_status vmc_study_run_sweep(const vmc_study* study, vmc_report** out) {
  return run_command<vesselmc::run_sweep>(study, out, "vmc_study_run_sweep");
}

vmc_status vmc_study_run_sensitivity(const vmc_study* study,
                                     vmc_report** out) {
  return run_command<vesselmc::run_sensitivity>(study, out,
                                                "vmc_study_run_sensitivity");
}

void vmc_report_free(vmc_report* report) { delete report; }

const char* vmc_report_summary(const vmc_report* report) {
  if (report == nullptr) return nullptr;
  return report->report.summary.c_str();
}

size_t vmc_report_file_count(const vmc_report* report) {
  if (report == nullptr) return 0;
  return report->report.files.size();
}

const char* vmc_report_file_name(const vmc_report* report, size_t index) {
  if (report == nullptr || index >= report->report.files.size()) {
    return nullptr;
  }
  return report->report.files[index].name.c_str();
}

const char* vmc_report_file_text(const vmc_report* report, size_t index) {
  if (report == nullptr || index >= report->report.files.size()) {
    return nullptr;
  }
  return report->report.files[index].text.c_str();
}

vmc_status vmc_report_write(const vmc_report* report, const char* out_dir) {
  if (report == nullptr || out_dir == nullptr) {
    return fail_argument("vmc_report_write: null argument");
  }
  return guarded([&] {
    vesselmc::write_report(report->report, out_dir);
    return VMC_OK;
  });
}

}  // extern "C"

// vesselmc command-line tool. Thin shell over the C API: parse flags,
// build the study, run the requested subcommand, print the summary and
// write the report files.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vesselmc/vesselmc.h"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<int> threads;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--config", opt.config_path, "study configuration (JSON)")
      ->required();
  cmd->add_option("--out", opt.out_dir, "output directory")
      ->capture_default_str();
  cmd->add_option("--seed", opt.seed, "override the config seed");
  cmd->add_option("--trials", opt.trials, "override the config trial count");
  cmd->add_option("--threads", opt.threads,
                  "worker threads (performance only, never affects values; "
                  "defaults to VESSELMC_THREADS or hardware concurrency)");
}

[[noreturn]] void die(const char* stage) {
  std::fprintf(stderr, "vesselmc: %s: %s\n", stage, vmc_last_error());
  std::exit(1);
}

int resolve_env_threads() {
  const char* env = std::getenv("VESSELMC_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 4096) {
    std::fprintf(stderr, "vesselmc: VESSELMC_THREADS must be an integer in [1, 4096], got '%s'\n", env);
    std::exit(1);
  }
  return static_cast<int>(v);
}

using Runner = vmc_status (*)(const vmc_study*, vmc_report**);

int run(const CommonOptions& opt, Runner runner) {
  vmc_study* study = nullptr;
  if (vmc_study_parse_file(opt.config_path.c_str(), &study) != VMC_OK) {
    die("config");
  }
  if (opt.seed && vmc_study_set_seed(study, *opt.seed) != VMC_OK) die("seed");
  if (opt.trials && vmc_study_set_trials(study, *opt.trials) != VMC_OK) {
    die("trials");
  }
  const int threads = opt.threads.value_or(resolve_env_threads());
  if (vmc_study_set_threads(study, threads) != VMC_OK) die("threads");

  vmc_report* report = nullptr;
  if (runner(study, &report) != VMC_OK) {
    vmc_study_free(study);
    die("run");
  }
  std::fputs(vmc_report_summary(report), stdout);

  if (vmc_report_write(report, opt.out_dir.c_str()) != VMC_OK) {
    vmc_report_free(report);
    vmc_study_free(study);
    die("write");
  }
  for (size_t i = 0; i < vmc_report_file_count(report); ++i) {
    std::printf("wrote %s/%s\n", opt.out_dir.c_str(),
                vmc_report_file_name(report, i));
  }
  vmc_report_free(report);
  vmc_study_free(study);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo burst-failure reliability of thin-walled "
               "cylindrical pressure vessels"};
  app.set_version_flag("--version", std::string(vmc_version()));
  app.require_subcommand(1);

  CommonOptions burst_opt, estimate_opt, sweep_opt, sensitivity_opt;
  CLI::App* burst = app.add_subcommand(
      "burst", "deterministic burst pressures at the model means");
  add_common_options(burst, burst_opt);
  CLI::App* estimate = app.add_subcommand(
      "estimate", "Monte Carlo failure probability per criterion");
  add_common_options(estimate, estimate_opt);
  CLI::App* sweep = app.add_subcommand(
      "sweep", "failure probability across a standard-deviation range");
  add_common_options(sweep, sweep_opt);
  CLI::App* sensitivity = app.add_subcommand(
      "sensitivity", "finite-difference sensitivity coefficients");
  add_common_options(sensitivity, sensitivity_opt);

  CLI11_PARSE(app, argc, argv);

  if (burst->parsed()) return run(burst_opt, vmc_study_run_burst);
  if (estimate->parsed()) return run(estimate_opt, vmc_study_run_estimate);
  if (sweep->parsed()) return run(sweep_opt, vmc_study_run_sweep);
  return run(sensitivity_opt, vmc_study_run_sensitivity);
}

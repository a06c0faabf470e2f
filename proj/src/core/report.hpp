#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/study.hpp"

namespace vesselmc {

struct ReportFile {
  std::string name;  // flat file name within the output directory
  std::string text;
};

// The rendered outcome of one command: a human-readable summary for
// standard output plus the files to be written. Rendering is fully
// deterministic, so identical (config, seed) yield byte-identical text
// regardless of thread count.
struct Report {
  std::string summary;
  std::vector<ReportFile> files;
};

// burst_at_means per criterion. Files: burst.csv.
Report run_burst(const StudyConfig& cfg);

// estimate_all. Files: estimate.csv, estimate.json, trace_<criterion>.csv.
Report run_estimate(const StudyConfig& cfg);

// Standard-deviation sweep per configured criterion. Files: sweep.csv.
// Throws ConfigError when the config has no sweep block.
Report run_sweep(const StudyConfig& cfg);

// Sensitivity grid. Files: sensitivity.csv. Throws ConfigError when the
// config has no sensitivity block.
Report run_sensitivity(const StudyConfig& cfg);

// Writes every file of the report into out_dir (created if needed).
// On failure no partial output is left behind: files already written by
// this call are removed before IoError is thrown.
void write_report(const Report& report, const std::filesystem::path& out_dir);

// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double v);

}  // namespace vesselmc

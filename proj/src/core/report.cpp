#include "core/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace vesselmc {

namespace {

std::string format_fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Compact rendering for the stdout summary; files keep full precision.
std::string format_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Column-aligned two-column table for the stdout summary.
std::string two_column(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [a, _] : rows) width = std::max(width, a.size());
  std::string out;
  for (const auto& [a, b] : rows) {
    out += a;
    out.append(width - a.size() + 2, ' ');
    out += b;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Report run_burst(const StudyConfig& cfg) {
  Report report;
  std::string csv = "criterion,burst_pressure_mpa\n";
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("criterion", "burst_pressure_mpa");
  for (Criterion c : cfg.criteria) {
    const BurstResult burst = burst_at_means(c, cfg.model);
    if (!burst.is_valid()) {
      // Unreachable for a validated model; means are always admissible.
      throw ValidationError(std::string("burst: model inadmissible at means (") +
                            std::string(invalid_reason_name(burst.reason())) +
                            ")");
    }
    const std::string mpa = format_fixed2(burst.value_pa() / 1e6);
    csv += std::string(criterion_name(c)) + "," + mpa + "\n";
    rows.emplace_back(std::string(criterion_name(c)), mpa);
  }
  report.summary = two_column(rows);
  report.files.push_back({"burst.csv", std::move(csv)});
  return report;
}

Report run_estimate(const StudyConfig& cfg) {
  const CriterionEstimates results =
      estimate_all(cfg.model, cfg.criteria, cfg.run);

  Report report;
  std::string csv =
      "criterion,trials,failures,invalid_samples,pof,std_error,reliability\n";
  std::ostringstream summary;
  summary << "trials=" << cfg.run.trials << " seed=" << cfg.run.seed << "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("criterion", "pof  (std_error, reliability)");

  nlohmann::ordered_json doc;
  doc["trials"] = cfg.run.trials;
  doc["seed"] = cfg.run.seed;
  doc["criteria"] = nlohmann::ordered_json::array();

  for (const auto& [c, r] : results) {
    const std::string name(criterion_name(c));
    csv += name + "," + std::to_string(r.trials) + "," +
           std::to_string(r.failures) + "," +
           std::to_string(r.invalid_samples) + "," + format_shortest(r.pof) +
           "," + format_shortest(r.std_error) + "," +
           format_shortest(r.reliability) + "\n";
    rows.emplace_back(name, format_compact(r.pof) + "  (" +
                                format_compact(r.std_error) + ", " +
                                format_compact(r.reliability) + ")");

    nlohmann::ordered_json entry;
    entry["criterion"] = name;
    entry["pof"] = r.pof;
    entry["reliability"] = r.reliability;
    entry["std_error"] = r.std_error;
    entry["trials"] = r.trials;
    entry["failures"] = r.failures;
    entry["invalid_samples"] = r.invalid_samples;
    auto trace = nlohmann::ordered_json::array();
    for (const TracePoint& p : r.trace) {
      trace.push_back({p.trials_so_far, p.running_pof});
    }
    entry["trace"] = std::move(trace);
    doc["criteria"].push_back(std::move(entry));
  }

  report.summary = summary.str() + two_column(rows);
  report.files.push_back({"estimate.csv", std::move(csv)});
  report.files.push_back({"estimate.json", doc.dump(2) + "\n"});
  for (const auto& [c, r] : results) {
    std::string trace_csv = "trials,running_pof\n";
    for (const TracePoint& p : r.trace) {
      trace_csv += std::to_string(p.trials_so_far) + "," +
                   format_shortest(p.running_pof) + "\n";
    }
    report.files.push_back(
        {"trace_" + std::string(criterion_name(c)) + ".csv",
         std::move(trace_csv)});
  }
  return report;
}

Report run_sweep(const StudyConfig& cfg) {
  if (!cfg.sweep) {
    throw ConfigError("sweep: config has no sweep block");
  }
  const SweepSpec& spec = *cfg.sweep;

  Report report;
  std::string csv = "criterion,variable,std_dev_si,std_dev_display,pof,std_error\n";
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("criterion",
                    "pof at sigma endpoints (" +
                        std::string(variable_name(spec.variable)) + ")");
  for (Criterion c : cfg.criteria) {
    const SweepResult sweep = sweep_std(cfg.model, c, spec.variable,
                                        spec.lo_si, spec.hi_si, spec.steps,
                                        cfg.run);
    for (const SweepPoint& p : sweep.points) {
      csv += std::string(criterion_name(c)) + "," +
             std::string(variable_name(spec.variable)) + "," +
             format_shortest(p.std_dev_si) + "," +
             format_shortest(to_display_unit(spec.variable, p.std_dev_si)) +
             "," + format_shortest(p.pof) + "," +
             format_shortest(p.std_error) + "\n";
    }
    rows.emplace_back(std::string(criterion_name(c)),
                      format_compact(sweep.points.front().pof) + " -> " +
                          format_compact(sweep.points.back().pof));
  }
  report.summary = two_column(rows);
  report.files.push_back({"sweep.csv", std::move(csv)});
  return report;
}

Report run_sensitivity(const StudyConfig& cfg) {
  if (!cfg.sensitivity) {
    throw ConfigError("sensitivity: config has no sensitivity block");
  }
  const SensitivitySpec& spec = *cfg.sensitivity;
  const std::vector<SensitivityResult> grid =
      sensitivity_all(cfg.model, cfg.criteria, spec.variables, spec.delta_cov,
                      cfg.run, spec.mode);

  Report report;
  std::string csv =
      "criterion,variable,base_pof,delta_cov,delta_x_si,pof_increment,"
      "coefficient_per_mpa\n";
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("criterion/variable", "coefficient (display units)");
  // Rows grouped by criterion in config order; the grid itself is
  // variable-major.
  for (Criterion c : cfg.criteria) {
    for (const SensitivityResult& cell : grid) {
      if (cell.criterion != c) continue;
      // Coefficient per display unit: per MPa for pressures and strengths,
      // per mm for diameters.
      const double coeff_display =
          cell.pof_increment / to_display_unit(cell.variable, cell.delta_x_si);
      csv += std::string(criterion_name(c)) + "," +
             std::string(variable_name(cell.variable)) + "," +
             format_shortest(cell.base_pof) + "," +
             format_shortest(cell.delta_cov) + "," +
             format_shortest(cell.delta_x_si) + "," +
             format_shortest(cell.pof_increment) + "," +
             format_shortest(coeff_display) + "\n";
      rows.emplace_back(std::string(criterion_name(c)) + "/" +
                            std::string(variable_name(cell.variable)),
                        format_compact(coeff_display) + " per " +
                            std::string(display_unit_name(cell.variable)));
    }
  }
  report.summary = two_column(rows);
  report.files.push_back({"sensitivity.csv", std::move(csv)});
  return report;
}

void write_report(const Report& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir.string() + ": " +
                  ec.message());
  }
  std::vector<std::filesystem::path> written;
  auto cleanup = [&written] {
    for (const auto& p : written) {
      std::error_code ignore;
      std::filesystem::remove(p, ignore);
    }
  };
  for (const ReportFile& file : report.files) {
    const std::filesystem::path path = out_dir / file.name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      cleanup();
      throw IoError("cannot open " + path.string() + " for writing");
    }
    written.push_back(path);
    out.write(file.text.data(),
              static_cast<std::streamsize>(file.text.size()));
    out.flush();
    if (!out) {
      cleanup();
      throw IoError("failed while writing " + path.string());
    }
  }
}

}  // namespace vesselmc

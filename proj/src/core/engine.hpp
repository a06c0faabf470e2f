#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "core/criteria.hpp"
#include "core/model.hpp"

namespace vesselmc {

// Monte Carlo run parameters. `threads` is a performance knob only: any
// value produces bit-identical results.
struct RunConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  std::uint32_t chunk_size = 1u << 14;
  std::uint32_t trace_points = 50;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

// Safety margin g = P_b - P_o in Pa, or the propagated burst invalidity.
class LimitState {
 public:
  static LimitState valid(double margin_pa) {
    return LimitState(margin_pa, std::nullopt);
  }
  static LimitState invalid(InvalidReason reason) {
    return LimitState(0.0, reason);
  }

  bool is_valid() const { return !reason_.has_value(); }
  double margin_pa() const { return margin_pa_; }
  InvalidReason reason() const { return *reason_; }

 private:
  LimitState(double margin_pa, std::optional<InvalidReason> reason)
      : margin_pa_(margin_pa), reason_(reason) {}

  double margin_pa_;
  std::optional<InvalidReason> reason_;
};

// g = burst_pressure(c, s) - s.p_o, or the invalid marker.
LimitState limit_state(Criterion c, const DesignSample& s);

// Failure indicator: 1 when g <= 0, 0 when g > 0. Ties (g == 0) count as
// failure. Non-finite margins other than +inf also count as failure.
int indicator(double g);

// 1 when the limit state is invalid or its margin indicates failure.
int indicator(const LimitState& g);

struct TracePoint {
  std::uint64_t trials_so_far;
  double running_pof;
};

struct EstimateResult {
  double pof = 0.0;
  double reliability = 1.0;  // always exactly 1 - pof
  double std_error = 0.0;    // binomial plug-in sqrt(pof (1-pof) / trials)
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t invalid_samples = 0;  // subset of failures
  std::vector<TracePoint> trace;      // running estimate at checkpoints
};

using CriterionEstimates = std::vector<std::pair<Criterion, EstimateResult>>;

// Runs the sampling loop once and evaluates every requested criterion on
// the shared sample stream (common random numbers), so cross-criterion
// comparisons are low-variance and each entry equals an estimate_pof run
// with the same config.
//
// Samples are drawn chunk-by-chunk; chunk i uses stream_index i of
// cfg.seed. Chunks may execute on several threads, and the per-chunk
// counts are combined in chunk order, so every field of every result is
// bit-identical for any worker count.
//
// Throws ConfigError on an empty or duplicate criteria list.
CriterionEstimates estimate_all(const VesselModel& model,
                                std::span<const Criterion> criteria,
                                const RunConfig& cfg);

// Single-criterion convenience over the same loop.
EstimateResult estimate_pof(const VesselModel& model, Criterion c,
                            const RunConfig& cfg);

// Trace checkpoints: `points` trial counts spaced logarithmically from
// min(100, trials) to trials, deduplicated, final checkpoint == trials.
std::vector<std::uint64_t> trace_checkpoints(std::uint64_t trials,
                                             std::uint32_t points);

}  // namespace vesselmc

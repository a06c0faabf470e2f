#include "core/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace vesselmc {

void RunConfig::validate() const {
  if (trials < 1) throw ValidationError("trials must be >= 1");
  if (chunk_size < 1) throw ValidationError("chunk_size must be >= 1");
  if (trace_points < 1) throw ValidationError("trace_points must be >= 1");
  if (threads < 0) throw ValidationError("threads must be >= 0");
}

LimitState limit_state(Criterion c, const DesignSample& s) {
  const BurstResult burst = burst_pressure(c, s);
  if (!burst.is_valid()) return LimitState::invalid(burst.reason());
  return LimitState::valid(burst.value_pa() - s.p_o);
}

int indicator(double g) { return g > 0.0 ? 0 : 1; }

int indicator(const LimitState& g) {
  return g.is_valid() ? indicator(g.margin_pa()) : 1;
}

std::vector<std::uint64_t> trace_checkpoints(std::uint64_t trials,
                                             std::uint32_t points) {
  const std::uint64_t lo = std::min<std::uint64_t>(100, trials);
  std::vector<std::uint64_t> ts;
  ts.reserve(points);
  if (points == 1 || lo == trials) {
    ts.push_back(trials);
    return ts;
  }
  const double ratio = static_cast<double>(trials) / static_cast<double>(lo);
  for (std::uint32_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    const double v = static_cast<double>(lo) * std::pow(ratio, f);
    auto t = static_cast<std::uint64_t>(std::llround(v));
    ts.push_back(std::clamp<std::uint64_t>(t, 1, trials));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  ts.back() = trials;
  return ts;
}

namespace {

// Per-chunk tallies, merged in chunk order after the parallel phase.
struct ChunkTally {
  std::vector<std::uint64_t> failures;  // per criterion
  std::vector<std::uint64_t> invalid;   // per criterion
  // Cumulative per-criterion failure counts at each checkpoint that falls
  // inside this chunk, in checkpoint order.
  std::vector<std::vector<std::uint64_t>> at_checkpoints;
};

int resolve_threads(int requested, std::uint64_t chunk_count) {
  unsigned n = requested > 0 ? static_cast<unsigned>(requested)
                             : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<int>(std::min<std::uint64_t>(n, chunk_count));
}

}  // namespace

CriterionEstimates estimate_all(const VesselModel& model,
                                std::span<const Criterion> criteria,
                                const RunConfig& cfg) {
  model.validate();
  cfg.validate();
  if (criteria.empty()) {
    throw ConfigError("estimate_all: criteria list is empty");
  }
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    for (std::size_t j = i + 1; j < criteria.size(); ++j) {
      if (criteria[i] == criteria[j]) {
        throw ConfigError(std::string("estimate_all: duplicate criterion '") +
                          std::string(criterion_name(criteria[i])) + "'");
      }
    }
  }

  const std::size_t n_crit = criteria.size();
  const std::uint64_t m = cfg.trials;
  const std::uint64_t chunk_count = (m + cfg.chunk_size - 1) / cfg.chunk_size;
  const std::vector<std::uint64_t> checkpoints =
      trace_checkpoints(m, cfg.trace_points);

  // Checkpoint t is recorded by the chunk that executes trial t.
  std::vector<std::vector<std::uint64_t>> chunk_checkpoints(chunk_count);
  for (std::uint64_t t : checkpoints) {
    chunk_checkpoints[(t - 1) / cfg.chunk_size].push_back(t);
  }

  std::vector<ChunkTally> tallies(chunk_count);
  std::atomic<std::uint64_t> next_chunk{0};

  auto run_chunks = [&] {
    for (std::uint64_t chunk;
         (chunk = next_chunk.fetch_add(1, std::memory_order_relaxed)) <
         chunk_count;) {
      const std::uint64_t first = chunk * cfg.chunk_size;  // 0-based
      const std::uint64_t last = std::min<std::uint64_t>(m, first + cfg.chunk_size);
      ChunkTally& tally = tallies[chunk];
      tally.failures.assign(n_crit, 0);
      tally.invalid.assign(n_crit, 0);
      tally.at_checkpoints.reserve(chunk_checkpoints[chunk].size());

      RngStream stream(cfg.seed, chunk);
      const auto& cps = chunk_checkpoints[chunk];
      std::size_t next_cp = 0;
      for (std::uint64_t trial = first; trial < last; ++trial) {
        const DesignSample sample = sample_design(model, stream);
        for (std::size_t k = 0; k < n_crit; ++k) {
          const LimitState g = limit_state(criteria[k], sample);
          if (!g.is_valid()) {
            ++tally.invalid[k];
            ++tally.failures[k];
          } else if (indicator(g.margin_pa())) {
            ++tally.failures[k];
          }
        }
        while (next_cp < cps.size() && cps[next_cp] == trial + 1) {
          tally.at_checkpoints.push_back(tally.failures);
          ++next_cp;
        }
      }
    }
  };

  const int n_threads = resolve_threads(cfg.threads, chunk_count);
  if (n_threads <= 1) {
    run_chunks();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(run_chunks);
    for (auto& th : pool) th.join();
  }

  // Ordered reduction: identical to a single-threaded pass.
  CriterionEstimates results;
  results.reserve(n_crit);
  for (std::size_t k = 0; k < n_crit; ++k) {
    results.emplace_back(criteria[k], EstimateResult{});
    results.back().second.trace.reserve(checkpoints.size());
  }
  std::vector<std::uint64_t> prefix(n_crit, 0);
  for (std::uint64_t chunk = 0; chunk < chunk_count; ++chunk) {
    const ChunkTally& tally = tallies[chunk];
    const auto& cps = chunk_checkpoints[chunk];
    for (std::size_t i = 0; i < cps.size(); ++i) {
      for (std::size_t k = 0; k < n_crit; ++k) {
        const std::uint64_t fail_count = prefix[k] + tally.at_checkpoints[i][k];
        results[k].second.trace.push_back(
            {cps[i], static_cast<double>(fail_count) /
                         static_cast<double>(cps[i])});
      }
    }
    for (std::size_t k = 0; k < n_crit; ++k) {
      prefix[k] += tally.failures[k];
      results[k].second.invalid_samples += tally.invalid[k];
    }
  }

  for (std::size_t k = 0; k < n_crit; ++k) {
    EstimateResult& r = results[k].second;
    r.trials = m;
    r.failures = prefix[k];
    r.pof = static_cast<double>(r.failures) / static_cast<double>(m);
    r.reliability = 1.0 - r.pof;
    r.std_error =
        std::sqrt(r.pof * (1.0 - r.pof) / static_cast<double>(m));
  }
  return results;
}

EstimateResult estimate_pof(const VesselModel& model, Criterion c,
                            const RunConfig& cfg) {
  const Criterion one[] = {c};
  return std::move(estimate_all(model, one, cfg).front().second);
}

}  // namespace vesselmc

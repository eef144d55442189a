#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "uxagent/config.hpp"
#include "uxagent/level.hpp"
#include "uxagent/trace.hpp"

namespace uxagent {

struct RunSummary {
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::Exhausted;
  double duration_s = 0.0;
  double final_valence = 0.0;
  double final_arousal = 0.0;
  QuadrantOccupancy quadrants;
  bool envelope_pass = false;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

/// Seeds of the extreme runs; ties go to the earliest run in input order.
struct EnsembleExtremes {
  std::uint64_t min_final_valence = 0;
  std::uint64_t max_final_valence = 0;
  std::uint64_t min_final_arousal = 0;
  std::uint64_t max_final_arousal = 0;
  std::uint64_t min_duration = 0;
  std::uint64_t max_duration = 0;

  friend bool operator==(const EnsembleExtremes&, const EnsembleExtremes&) = default;
};

struct EnsembleReport {
  std::size_t runs = 0;
  std::vector<RunSummary> summaries;
  double envelope_pass_fraction = 0.0;
  EnsembleExtremes extremes;

  friend bool operator==(const EnsembleReport&, const EnsembleReport&) = default;
};

/// One run per seed with `config.seed` replaced, results in input order. Runs
/// are spread over up to `workers` threads (0: hardware concurrency). Throws
/// Error on duplicate seeds or an invalid config.
std::vector<RunResult> run_many(const Level& level, const RunConfig& config,
                                std::span<const std::uint64_t> seeds,
                                std::string map_id = "custom", unsigned workers = 0);

/// Throws Error on an empty result list.
EnsembleReport aggregate(std::span<const RunResult> results, const AffectEnvelope& envelope);

/// Report JSON; with `traces` the full per-run results are appended under "traces".
std::string report_to_json(const EnsembleReport& report,
                           std::span<const RunResult> traces = {});

}  // namespace uxagent

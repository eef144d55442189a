#include "uxagent/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <set>
#include <thread>

#include "json_io.hpp"
#include "uxagent/error.hpp"
#include "uxagent/simulation.hpp"

namespace uxagent {

std::vector<RunResult> run_many(const Level& level, const RunConfig& config,
                                std::span<const std::uint64_t> seeds, std::string map_id,
                                unsigned workers) {
  std::set<std::uint64_t> seen;
  for (auto seed : seeds) {
    if (!seen.insert(seed).second) throw Error("duplicate seed " + std::to_string(seed));
  }
  config.check();

  std::vector<std::optional<RunResult>> slots(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        RunConfig c = config;
        c.seed = seeds[i];
        slots[i] = run_simulation(level, c, map_id);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, seeds.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  std::vector<RunResult> out;
  out.reserve(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

EnsembleReport aggregate(std::span<const RunResult> results, const AffectEnvelope& envelope) {
  if (results.empty()) throw Error("cannot aggregate an empty ensemble");
  envelope.check();

  EnsembleReport report;
  report.runs = results.size();
  std::size_t passes = 0;
  for (const auto& run : results) {
    if (run.trace.empty()) throw Error("run with seed " + std::to_string(run.seed) + " has no trace");
    RunSummary s;
    s.seed = run.seed;
    s.outcome = run.outcome;
    s.duration_s = run.duration_s;
    s.final_valence = run.trace.back().valence;
    s.final_arousal = run.trace.back().arousal;
    s.quadrants = quadrant_occupancy(run.trace);
    s.envelope_pass = evaluate_envelope(run.trace, envelope).pass;
    passes += s.envelope_pass ? 1 : 0;
    report.summaries.push_back(s);
  }
  report.envelope_pass_fraction =
      static_cast<double>(passes) / static_cast<double>(results.size());

  const auto& ss = report.summaries;
  auto extreme = [&](auto key, bool want_max) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < ss.size(); ++i) {
      const double a = key(ss[i]);
      const double b = key(ss[best]);
      if (want_max ? a > b : a < b) best = i;
    }
    return ss[best].seed;
  };
  auto valence = [](const RunSummary& s) { return s.final_valence; };
  auto arousal = [](const RunSummary& s) { return s.final_arousal; };
  auto duration = [](const RunSummary& s) { return s.duration_s; };
  report.extremes = {extreme(valence, false),  extreme(valence, true),
                     extreme(arousal, false),  extreme(arousal, true),
                     extreme(duration, false), extreme(duration, true)};
  return report;
}

std::string report_to_json(const EnsembleReport& report, std::span<const RunResult> traces) {
  nlohmann::json summaries = nlohmann::json::array();
  for (const auto& s : report.summaries) {
    summaries.push_back({{"seed", s.seed},
                         {"outcome", to_string(s.outcome)},
                         {"duration_s", s.duration_s},
                         {"final_valence", s.final_valence},
                         {"final_arousal", s.final_arousal},
                         {"envelope_pass", s.envelope_pass},
                         {"quadrants",
                          {{"pp", s.quadrants.pp},
                           {"pm", s.quadrants.pm},
                           {"mp", s.quadrants.mp},
                           {"mm", s.quadrants.mm}}}});
  }
  const auto& e = report.extremes;
  nlohmann::json j{{"runs", report.runs},
                   {"envelope_pass_fraction", report.envelope_pass_fraction},
                   {"summaries", std::move(summaries)},
                   {"extremes",
                    {{"min_final_valence", e.min_final_valence},
                     {"max_final_valence", e.max_final_valence},
                     {"min_final_arousal", e.min_final_arousal},
                     {"max_final_arousal", e.max_final_arousal},
                     {"min_duration", e.min_duration},
                     {"max_duration", e.max_duration}}}};
  if (!traces.empty()) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : traces) runs.push_back(run_to_json(r));
    j["traces"] = std::move(runs);
  }
  return j.dump(2) + "\n";
}

}  // namespace uxagent

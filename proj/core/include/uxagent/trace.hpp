#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uxagent/affect.hpp"
#include "uxagent/config.hpp"
#include "uxagent/grid.hpp"

namespace uxagent {

struct TraceRecord {
  std::int64_t tick = 0;
  double time_s = 0.0;
  GridPos pos;
  double valence = 0.0;
  double arousal = 0.0;
  std::vector<std::string> events;  // event_tag() strings

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

enum class Outcome : std::uint8_t { GoalFound, Exhausted };

std::string_view to_string(Outcome outcome);
Outcome parse_outcome(std::string_view text);

struct RunResult {
  std::vector<TraceRecord> trace;
  Outcome outcome = Outcome::Exhausted;
  double duration_s = 0.0;
  std::uint64_t seed = 0;
  std::string map_id;
  RunConfig config;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Accumulates contiguous per-tick records for one run.
class TraceBuilder {
 public:
  /// Appends `record`; its tick must be 0 for the first record and previous + 1
  /// afterwards, otherwise throws Error.
  void record_tick(TraceRecord record);

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }

  /// Moves the records into a RunResult; duration is the last record's time.
  RunResult finish(Outcome outcome, std::uint64_t seed, std::string map_id, RunConfig config) &&;

 private:
  std::vector<TraceRecord> records_;
};

/// Share of ticks per sign quadrant; zero counts as non-negative.
struct QuadrantOccupancy {
  double pp = 0.0;  // v >= 0, a >= 0
  double pm = 0.0;  // v >= 0, a < 0
  double mp = 0.0;  // v < 0,  a >= 0
  double mm = 0.0;  // v < 0,  a < 0

  friend bool operator==(const QuadrantOccupancy&, const QuadrantOccupancy&) = default;
};

/// Throws Error on an empty trace.
QuadrantOccupancy quadrant_occupancy(std::span<const TraceRecord> trace);

struct EnvelopeWindow {
  double from_s = 0.0;
  std::optional<double> to_s;  // nullopt: until the end of the run
  double v_min = -5.0;
  double v_max = 5.0;
  double a_min = -5.0;
  double a_max = 5.0;

  friend bool operator==(const EnvelopeWindow&, const EnvelopeWindow&) = default;
};

/// Time-windowed affect bounds a run must stay inside. Windows may overlap.
struct AffectEnvelope {
  std::vector<EnvelopeWindow> windows;

  /// Throws Error on a reversed time range, inverted bounds, or bounds outside
  /// the default clamp range [-5, 5].
  void check() const;

  /// One window over the whole run with the full default clamp range.
  static AffectEnvelope vacuous();

  friend bool operator==(const AffectEnvelope&, const AffectEnvelope&) = default;
};

struct EnvelopeViolation {
  std::int64_t tick = 0;
  std::string bound;  // "v_min", "v_max", "a_min" or "a_max"

  friend bool operator==(const EnvelopeViolation&, const EnvelopeViolation&) = default;
};

struct EnvelopeResult {
  bool pass = true;
  std::vector<EnvelopeViolation> violations;
};

/// A record falls in a window when from_s <= time_s <= to_s (to within 1e-9 s).
EnvelopeResult evaluate_envelope(std::span<const TraceRecord> trace, const AffectEnvelope& envelope);

/// JSON array of `{from_s, to_s|"end", v_min, v_max, a_min, a_max}`.
AffectEnvelope parse_envelope(std::string_view json_text);
std::string envelope_to_json(const AffectEnvelope& envelope);

/// Re-derives the affect trajectory from the recorded event tags: tick 0 applies
/// its events only, every later tick applies events then one decay step.
std::vector<AffectState> replay_affect(std::span<const TraceRecord> trace,
                                       const AppraisalConfig& cfg, double tick_s);

/// `tick,time_s,x,y,valence,arousal,events` with shortest round-trip decimals
/// and `;`-joined event tags.
void write_csv(const RunResult& run, std::ostream& out);
void write_csv(const RunResult& run, const std::filesystem::path& path);
std::vector<TraceRecord> read_csv(std::istream& in);
std::vector<TraceRecord> read_csv(const std::filesystem::path& path);

/// `{meta: {map, seed, config, outcome, duration_s}, trace: [records]}`.
void write_json(const RunResult& run, std::ostream& out);
void write_json(const RunResult& run, const std::filesystem::path& path);
RunResult read_json(std::istream& in);
RunResult read_json(const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace uxagent

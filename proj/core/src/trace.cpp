#include "uxagent/trace.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "uxagent/error.hpp"

namespace uxagent {

namespace {

constexpr std::string_view kCsvHeader = "tick,time_s,x,y,valence,arousal,events";
constexpr double kWindowSlack = 1e-9;

template <typename T>
T parse_number(std::string_view field, int line_no, int column) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("bad number '" + std::string(field) + "'", line_no, column);
  }
  return value;
}

std::vector<std::string> split_tags(std::string_view joined) {
  std::vector<std::string> out;
  if (joined.empty()) return out;
  std::size_t start = 0;
  while (start <= joined.size()) {
    std::size_t end = joined.find(';', start);
    if (end == std::string_view::npos) end = joined.size();
    out.emplace_back(joined.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

nlohmann::json record_to_json(const TraceRecord& r) {
  return {{"tick", r.tick},       {"time_s", r.time_s},   {"x", r.pos.x},
          {"y", r.pos.y},         {"valence", r.valence}, {"arousal", r.arousal},
          {"events", r.events}};
}

TraceRecord record_from_json(const nlohmann::json& j) {
  TraceRecord r;
  r.tick = j.at("tick").get<std::int64_t>();
  r.time_s = j.at("time_s").get<double>();
  r.pos = {j.at("x").get<int>(), j.at("y").get<int>()};
  r.valence = j.at("valence").get<double>();
  r.arousal = j.at("arousal").get<double>();
  r.events = j.at("events").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string_view to_string(Outcome outcome) {
  return outcome == Outcome::GoalFound ? "goal_found" : "exhausted";
}

Outcome parse_outcome(std::string_view text) {
  if (text == "goal_found") return Outcome::GoalFound;
  if (text == "exhausted") return Outcome::Exhausted;
  throw ParseError("unknown outcome '" + std::string(text) + "'");
}

void TraceBuilder::record_tick(TraceRecord record) {
  const std::int64_t expected = records_.empty() ? 0 : records_.back().tick + 1;
  if (record.tick != expected) {
    throw Error("non-contiguous tick " + std::to_string(record.tick) + ", expected " +
                std::to_string(expected));
  }
  records_.push_back(std::move(record));
}

RunResult TraceBuilder::finish(Outcome outcome, std::uint64_t seed, std::string map_id,
                               RunConfig config) && {
  RunResult out;
  out.duration_s = records_.empty() ? 0.0 : records_.back().time_s;
  out.trace = std::move(records_);
  out.outcome = outcome;
  out.seed = seed;
  out.map_id = std::move(map_id);
  out.config = std::move(config);
  return out;
}

QuadrantOccupancy quadrant_occupancy(std::span<const TraceRecord> trace) {
  if (trace.empty()) throw Error("quadrant occupancy of an empty trace");
  std::size_t pp = 0, pm = 0, mp = 0, mm = 0;
  for (const auto& r : trace) {
    const bool v = r.valence >= 0.0;
    const bool a = r.arousal >= 0.0;
    (v ? (a ? pp : pm) : (a ? mp : mm)) += 1;
  }
  const double n = static_cast<double>(trace.size());
  return {static_cast<double>(pp) / n, static_cast<double>(pm) / n, static_cast<double>(mp) / n,
          static_cast<double>(mm) / n};
}

namespace {
const AppraisalConfig kDefaultClamp{};
}  // namespace

void AffectEnvelope::check() const {
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const auto& w = windows[i];
    const std::string where = "envelope window " + std::to_string(i) + ": ";
    if (w.to_s && !(w.from_s < *w.to_s)) throw Error(where + "from_s must be below to_s");
    if (!(w.v_min <= w.v_max)) throw Error(where + "v_min exceeds v_max");
    if (!(w.a_min <= w.a_max)) throw Error(where + "a_min exceeds a_max");
    for (double bound : {w.v_min, w.v_max, w.a_min, w.a_max}) {
      if (bound < kDefaultClamp.clamp_lo || bound > kDefaultClamp.clamp_hi) {
        throw Error(where + "bounds must lie within [" + format_double(kDefaultClamp.clamp_lo) +
                    ", " + format_double(kDefaultClamp.clamp_hi) + "]");
      }
    }
  }
}

AffectEnvelope AffectEnvelope::vacuous() { return {{EnvelopeWindow{}}}; }

EnvelopeResult evaluate_envelope(std::span<const TraceRecord> trace, const AffectEnvelope& envelope) {
  envelope.check();
  EnvelopeResult out;
  for (const auto& r : trace) {
    for (const auto& w : envelope.windows) {
      if (r.time_s + kWindowSlack < w.from_s) continue;
      if (w.to_s && r.time_s > *w.to_s + kWindowSlack) continue;
      if (r.valence < w.v_min) out.violations.push_back({r.tick, "v_min"});
      if (r.valence > w.v_max) out.violations.push_back({r.tick, "v_max"});
      if (r.arousal < w.a_min) out.violations.push_back({r.tick, "a_min"});
      if (r.arousal > w.a_max) out.violations.push_back({r.tick, "a_max"});
    }
  }
  out.pass = out.violations.empty();
  return out;
}

AffectEnvelope parse_envelope(std::string_view json_text) {
  AffectEnvelope env;
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_array()) throw Error("envelope must be a JSON array");
    for (const auto& item : j) {
      EnvelopeWindow w;
      w.from_s = item.at("from_s").get<double>();
      const auto& to = item.at("to_s");
      if (to.is_string()) {
        if (to.get<std::string>() != "end") throw Error("to_s must be a number or \"end\"");
      } else {
        w.to_s = to.get<double>();
      }
      w.v_min = item.at("v_min").get<double>();
      w.v_max = item.at("v_max").get<double>();
      w.a_min = item.at("a_min").get<double>();
      w.a_max = item.at("a_max").get<double>();
      env.windows.push_back(w);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("envelope: ") + e.what());
  }
  env.check();
  return env;
}

std::string envelope_to_json(const AffectEnvelope& envelope) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& w : envelope.windows) {
    nlohmann::json item{{"from_s", w.from_s}, {"v_min", w.v_min}, {"v_max", w.v_max},
                        {"a_min", w.a_min},   {"a_max", w.a_max}};
    item["to_s"] = w.to_s ? nlohmann::json(*w.to_s) : nlohmann::json("end");
    j.push_back(std::move(item));
  }
  return j.dump(2);
}

std::vector<AffectState> replay_affect(std::span<const TraceRecord> trace,
                                       const AppraisalConfig& cfg, double tick_s) {
  std::vector<AffectState> out;
  out.reserve(trace.size());
  AffectState state = initial_affect();
  for (const auto& r : trace) {
    std::vector<SimEvent> events;
    for (const auto& tag : r.events) {
      if (auto e = parse_event_tag(tag)) events.push_back(std::move(*e));
    }
    state = apply_events(state, events, cfg);
    if (r.tick > 0) state = tick_decay(state, tick_s, cfg);
    out.push_back(state);
  }
  return out;
}

void write_csv(const RunResult& run, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : run.trace) {
    out << r.tick << ',' << format_double(r.time_s) << ',' << r.pos.x << ',' << r.pos.y << ','
        << format_double(r.valence) << ',' << format_double(r.arousal) << ',';
    for (std::size_t i = 0; i < r.events.size(); ++i) out << (i ? ";" : "") << r.events[i];
    out << '\n';
  }
}

void write_csv(const RunResult& run, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_csv(run, out);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::vector<TraceRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError("expected CSV header '" + std::string(kCsvHeader) + "'", 1, 1);
  }
  std::vector<TraceRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::vector<int> columns;
    std::string_view view(line);
    std::size_t start = 0;
    while (fields.size() < 6) {
      const std::size_t comma = view.find(',', start);
      if (comma == std::string_view::npos) throw ParseError("expected 7 fields", line_no, 1);
      fields.push_back(view.substr(start, comma - start));
      columns.push_back(static_cast<int>(start) + 1);
      start = comma + 1;
    }
    TraceRecord r;
    r.tick = parse_number<std::int64_t>(fields[0], line_no, columns[0]);
    r.time_s = parse_number<double>(fields[1], line_no, columns[1]);
    r.pos = {parse_number<int>(fields[2], line_no, columns[2]),
             parse_number<int>(fields[3], line_no, columns[3])};
    r.valence = parse_number<double>(fields[4], line_no, columns[4]);
    r.arousal = parse_number<double>(fields[5], line_no, columns[5]);
    r.events = split_tags(view.substr(start));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TraceRecord> read_csv(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_csv(in);
}

nlohmann::json run_to_json(const RunResult& run) {
  nlohmann::json meta{{"map", run.map_id},
                      {"seed", run.seed},
                      {"config", run.config},
                      {"outcome", to_string(run.outcome)},
                      {"duration_s", run.duration_s}};
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& r : run.trace) trace.push_back(record_to_json(r));
  return {{"meta", std::move(meta)}, {"trace", std::move(trace)}};
}

void write_json(const RunResult& run, std::ostream& out) { out << run_to_json(run).dump(1) << '\n'; }

void write_json(const RunResult& run, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_json(run, out);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

RunResult read_json(std::istream& in) {
  RunResult run;
  try {
    const auto j = nlohmann::json::parse(in);
    const auto& meta = j.at("meta");
    run.map_id = meta.at("map").get<std::string>();
    run.seed = meta.at("seed").get<std::uint64_t>();
    run.config = meta.at("config").get<RunConfig>();
    run.outcome = parse_outcome(meta.at("outcome").get<std::string>());
    run.duration_s = meta.at("duration_s").get<double>();
    for (const auto& r : j.at("trace")) run.trace.push_back(record_from_json(r));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("trace JSON: ") + e.what());
  }
  return run;
}

RunResult read_json(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_json(in);
}

}  // namespace uxagent

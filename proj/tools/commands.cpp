#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "uxagent/ensemble.hpp"
#include "uxagent/error.hpp"
#include "uxagent/level.hpp"
#include "uxagent/simulation.hpp"
#include "uxagent/trace.hpp"
#include "uxagent/viz.hpp"

namespace uxagent::cli {

namespace {

namespace fs = std::filesystem;

// Input that is present but malformed; maps to exit code 1.
struct InvalidInput : Error {
  using Error::Error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

struct LevelSource {
  std::string map;
  std::string path;

  void add_to(CLI::App& app) {
    auto* m = app.add_option("--map", map, "Built-in map M1..M4");
    auto* l = app.add_option("--level", path, "Level file");
    m->excludes(l);
  }
};

struct Loaded {
  Level level;
  std::string id;
};

Loaded load_level(const LevelSource& src, const std::string& fallback_map = {}) {
  if (!src.path.empty()) {
    Level level = [&] {
      try {
        return parse_level(read_file(src.path));
      } catch (const ParseError& e) {
        throw InvalidInput(src.path + ": " + e.what());
      }
    }();
    if (auto problems = validate(level); !problems.empty()) {
      std::string msg = src.path + ": invalid level";
      for (const auto& p : problems) msg += "\n  " + p;
      throw InvalidInput(msg);
    }
    return {std::move(level), fs::path(src.path).stem().string()};
  }
  const std::string& name = src.map.empty() ? fallback_map : src.map;
  if (name.empty()) throw CLI::ValidationError("--map or --level is required");
  try {
    const MapId id = parse_map_id(name);
    return {builtin(id), std::string(to_string(id))};
  } catch (const Error& e) {
    throw CLI::ValidationError(e.what());
  }
}

struct ConfigSource {
  std::string path;
  std::optional<std::uint64_t> seed;
  std::string door_order;
  std::optional<std::int64_t> tick_limit;

  void add_to(CLI::App& app) {
    app.add_option("--config", path, "Run configuration JSON");
    app.add_option("--seed", seed, "Agent seed");
    app.add_option("--door-order", door_order, "random, goal-first, goal-last or b1,b2,...");
    app.add_option("--tick-limit", tick_limit, "Abort after this many ticks");
  }

  RunConfig load() const {
    RunConfig c;
    if (!path.empty()) {
      try {
        c = parse_run_config(read_file(path));
      } catch (const IoError&) {
        throw;
      } catch (const Error& e) {
        throw CLI::ValidationError(path + ": " + e.what());
      }
    }
    if (seed) c.seed = *seed;
    if (tick_limit) c.tick_limit = *tick_limit;
    try {
      if (!door_order.empty()) c.door_order = DoorOrder::parse(door_order);
      c.check();
    } catch (const Error& e) {
      throw CLI::ValidationError(e.what());
    }
    return c;
  }
};

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  Level level = [&] {
    try {
      return parse_level(read_file(path));
    } catch (const ParseError& e) {
      throw InvalidInput(path + ": " + e.what());
    }
  }();
  const auto problems = validate(level);
  for (const auto& p : problems) err << path << ": " << p << '\n';
  if (!problems.empty()) return kInvalid;
  out << path << ": ok\n";
  return kOk;
}

// A door order naming buttons the level lacks is a bad argument, not a bad level.
void check_door_order(const Level& level, const RunConfig& config) {
  try {
    resolve_door_order(level, config.door_order);
  } catch (const Error& e) {
    throw CLI::ValidationError(std::string("--door-order: ") + e.what());
  }
}

int cmd_run(const LevelSource& src, const ConfigSource& cfg, const std::string& prefix,
            std::ostream& out) {
  const Loaded loaded = load_level(src);
  const RunConfig config = cfg.load();
  check_door_order(loaded.level, config);
  const RunResult run = run_simulation(loaded.level, config, loaded.id);
  write_csv(run, fs::path(prefix + ".csv"));
  write_json(run, fs::path(prefix + ".json"));
  const auto& last = run.trace.back();
  out << loaded.id << " seed " << run.seed << ": " << to_string(run.outcome) << " after "
      << format_double(run.duration_s) << " s, final valence " << format_double(last.valence)
      << ", arousal " << format_double(last.arousal) << '\n';
  return kOk;
}

int cmd_render(const std::string& trace_path, const LevelSource& src, const std::string& mode,
               const std::string& palette_path, const std::string& out_path, std::ostream& out) {
  RunResult run;
  try {
    if (fs::path(trace_path).extension() == ".csv") {
      run.trace = read_csv(fs::path(trace_path));
      run.map_id = fs::path(trace_path).stem().string();
    } else {
      run = read_json(fs::path(trace_path));
    }
  } catch (const ParseError& e) {
    throw InvalidInput(trace_path + ": " + e.what());
  }

  std::string svg;
  if (mode == "temporal") {
    svg = render_temporal(run);
  } else {
    std::string fallback;
    if (src.map.empty() && src.path.empty()) fallback = run.map_id;
    const Loaded loaded = load_level(src, fallback);
    AffectPalette palette;
    if (!palette_path.empty()) {
      try {
        palette = parse_palette(read_file(palette_path));
      } catch (const IoError&) {
        throw;
      } catch (const Error& e) {
        throw CLI::ValidationError(palette_path + ": " + e.what());
      }
    }
    svg = render_spatial(loaded.level, run, palette);
  }
  write_file(out_path, svg);
  out << "wrote " << out_path << '\n';
  return kOk;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw CLI::ValidationError("--seeds: bad seed '" + item + "'");
    }
    seeds.push_back(v);
  }
  if (seeds.empty()) throw CLI::ValidationError("--seeds: empty list");
  return seeds;
}

int cmd_ensemble(const LevelSource& src, const ConfigSource& cfg, std::optional<long long> runs,
                 const std::string& seed_list, const std::string& envelope_path,
                 const std::string& out_path, bool keep_traces, unsigned workers,
                 std::ostream& out) {
  std::vector<std::uint64_t> seeds;
  if (!seed_list.empty()) {
    seeds = parse_seed_list(seed_list);
  } else {
    if (!runs || *runs <= 0) throw CLI::ValidationError("--runs must be a positive count");
    for (long long i = 1; i <= *runs; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
  }
  const Loaded loaded = load_level(src);
  const RunConfig config = cfg.load();
  check_door_order(loaded.level, config);
  AffectEnvelope envelope = AffectEnvelope::vacuous();
  if (!envelope_path.empty()) {
    try {
      envelope = parse_envelope(read_file(envelope_path));
    } catch (const IoError&) {
      throw;
    } catch (const Error& e) {
      throw CLI::ValidationError(envelope_path + ": " + e.what());
    }
  }

  std::vector<RunResult> results;
  try {
    results = run_many(loaded.level, config, seeds, loaded.id, workers);
  } catch (const TickLimitExceeded&) {
    throw;
  } catch (const Error& e) {
    throw CLI::ValidationError(e.what());
  }
  const EnsembleReport report = aggregate(results, envelope);
  const std::string json =
      report_to_json(report, keep_traces ? std::span<const RunResult>(results)
                                         : std::span<const RunResult>());
  if (out_path.empty() || out_path == "-") {
    out << json;
  } else {
    write_file(out_path, json);
    out << loaded.id << ": " << report.runs << " runs, envelope pass fraction "
        << format_double(report.envelope_pass_fraction) << '\n';
  }
  return kOk;
}

int cmd_maps(const std::string& dir, std::ostream& out) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  for (const MapId id : kAllMaps) {
    const fs::path path = fs::path(dir) / (std::string(to_string(id)) + ".level");
    write_file(path, serialize_level(builtin(id)));
    out << "wrote " << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affect-annotated exploration runs on grid levels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "uxagent 0.1.0");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a level file");
  validate_cmd->add_option("level", validate_path, "Level file")->required();

  LevelSource run_level;
  ConfigSource run_cfg;
  std::string run_prefix = "run";
  auto* run_cmd = app.add_subcommand("run", "Run one simulation, write <out>.csv and <out>.json");
  run_level.add_to(*run_cmd);
  run_cfg.add_to(*run_cmd);
  run_cmd->add_option("--out", run_prefix, "Output prefix");

  std::string render_trace, render_mode = "spatial", render_palette, render_out;
  LevelSource render_level;
  auto* render_cmd = app.add_subcommand("render", "Render a trace as SVG");
  render_cmd->add_option("trace", render_trace, "Trace JSON or CSV")->required();
  render_level.add_to(*render_cmd);
  render_cmd->add_option("--mode", render_mode, "spatial or temporal")
      ->check(CLI::IsMember({"spatial", "temporal"}));
  render_cmd->add_option("--palette", render_palette, "Palette JSON");
  render_cmd->add_option("--out", render_out, "Output SVG")->required();

  LevelSource ens_level;
  ConfigSource ens_cfg;
  std::optional<long long> ens_runs;
  std::string ens_seeds, ens_envelope, ens_out;
  bool ens_traces = false;
  unsigned ens_workers = 0;
  auto* ens_cmd = app.add_subcommand("ensemble", "Run many seeds and aggregate");
  ens_level.add_to(*ens_cmd);
  ens_cfg.add_to(*ens_cmd);
  auto* runs_opt = ens_cmd->add_option("--runs", ens_runs, "Seeds 1..N");
  auto* seeds_opt = ens_cmd->add_option("--seeds", ens_seeds, "Comma-separated seeds");
  runs_opt->excludes(seeds_opt);
  ens_cmd->add_option("--envelope", ens_envelope, "Affect envelope JSON");
  ens_cmd->add_option("--out", ens_out, "Report JSON (default: stdout)");
  ens_cmd->add_flag("--traces", ens_traces, "Include full traces in the report");
  ens_cmd->add_option("--workers", ens_workers, "Worker threads (0: all cores)");

  std::string maps_dir = ".";
  auto* maps_cmd = app.add_subcommand("maps", "Write the built-in levels as files");
  maps_cmd->add_option("--out", maps_dir, "Output directory");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*validate_cmd) return cmd_validate(validate_path, out, err);
    if (*run_cmd) return cmd_run(run_level, run_cfg, run_prefix, out);
    if (*render_cmd) {
      return cmd_render(render_trace, render_level, render_mode, render_palette, render_out, out);
    }
    if (*ens_cmd) {
      if (!*runs_opt && !*seeds_opt) throw CLI::ValidationError("--runs or --seeds is required");
      return cmd_ensemble(ens_level, ens_cfg, ens_runs, ens_seeds, ens_envelope, ens_out,
                          ens_traces, ens_workers, out);
    }
    if (*maps_cmd) return cmd_maps(maps_dir, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const TickLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kTickLimit;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}

}  // namespace uxagent::cli

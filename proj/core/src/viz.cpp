#include "uxagent/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uxagent/error.hpp"

namespace uxagent {

namespace {

constexpr int kLegendPx = 96;
constexpr int kMarginPx = 48;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Halves round up; the slack absorbs blend error on exact .5 values.
std::uint8_t channel(double v) {
  return static_cast<std::uint8_t>(std::clamp(static_cast<long>(std::floor(v + 0.5 + 1e-9)), 0L, 255L));
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void svg_open(std::ostringstream& out, int width, int height, std::string_view title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>" << escape(title) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
}

}  // namespace

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

Rgb parse_hex(std::string_view text) {
  if (text.size() != 7 || text[0] != '#') throw ParseError("expected #rrggbb, got '" + std::string(text) + "'");
  auto byte = [&](std::size_t at) {
    unsigned v = 0;
    for (std::size_t i = at; i < at + 2; ++i) {
      const char c = text[i];
      v *= 16;
      if (c >= '0' && c <= '9') v += static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') v += static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v += static_cast<unsigned>(c - 'A' + 10);
      else throw ParseError("expected #rrggbb, got '" + std::string(text) + "'");
    }
    return static_cast<std::uint8_t>(v);
  };
  return {byte(1), byte(3), byte(5)};
}

AffectPalette parse_palette(std::string_view json_text) {
  AffectPalette p;
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw Error("palette must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      const Rgb c = parse_hex(value.get<std::string>());
      if (key == "low_low") p.low_low = c;
      else if (key == "low_high") p.low_high = c;
      else if (key == "high_low") p.high_low = c;
      else if (key == "high_high") p.high_high = c;
      else throw Error("unknown palette corner '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("palette: ") + e.what());
  }
  return p;
}

Rgb affect_to_color(double valence, double arousal, const AffectPalette& palette, double lo,
                    double hi) {
  if (!(lo < hi)) throw Error("affect colour range is empty");
  if (!(valence >= lo && valence <= hi && arousal >= lo && arousal <= hi)) {
    throw Error("affect (" + fmt(valence) + ", " + fmt(arousal) + ") outside the clamp range");
  }
  const double u = (valence - lo) / (hi - lo);
  const double w = (arousal - lo) / (hi - lo);
  auto blend = [&](std::uint8_t ll, std::uint8_t lh, std::uint8_t hl, std::uint8_t hh) {
    return channel((1 - u) * (1 - w) * ll + (1 - u) * w * lh + u * (1 - w) * hl + u * w * hh);
  };
  const auto& p = palette;
  return {blend(p.low_low.r, p.low_high.r, p.high_low.r, p.high_high.r),
          blend(p.low_low.g, p.low_high.g, p.high_low.g, p.high_high.g),
          blend(p.low_low.b, p.low_high.b, p.high_low.b, p.high_high.b)};
}

std::string render_spatial(const Level& level, const RunResult& run, const AffectPalette& palette) {
  for (const auto& r : run.trace) {
    if (!level.in_bounds(r.pos)) {
      throw Error("trace position " + to_string(r.pos) + " at tick " + std::to_string(r.tick) +
                  " lies outside the level");
    }
  }
  const double lo = run.config.appraisal.clamp_lo;
  const double hi = run.config.appraisal.clamp_hi;

  std::set<std::string> opened;
  for (const auto& r : run.trace) {
    for (const auto& tag : r.events) {
      if (auto e = parse_event_tag(tag); e && e->kind == EventKind::DoorOpened) opened.insert(e->object_id);
    }
  }

  const int width = std::max(level.width() * kCellPx, 5 * kCellPx + 200);
  const int height = level.height() * kCellPx + kLegendPx;
  std::ostringstream out;
  svg_open(out, width, height, "affect over space: " + run.map_id);

  out << "<g class=\"map\">\n";
  for (int y = 0; y < level.height(); ++y) {
    for (int x = 0; x < level.width(); ++x) {
      if (level.cell({x, y}) != CellKind::Wall) continue;
      out << "<rect class=\"wall\" x=\"" << x * kCellPx << "\" y=\"" << y * kCellPx
          << "\" width=\"" << kCellPx << "\" height=\"" << kCellPx << "\" fill=\"#3a3a3a\"/>\n";
    }
  }
  const GridPos s = level.spawn();
  out << "<rect class=\"spawn\" x=\"" << s.x * kCellPx + 2 << "\" y=\"" << s.y * kCellPx + 2
      << "\" width=\"" << kCellPx - 4 << "\" height=\"" << kCellPx - 4
      << "\" fill=\"none\" stroke=\"#2a7a2a\" stroke-width=\"2\"/>\n";
  for (const auto& obj : level.objects()) {
    const int px = obj.pos.x * kCellPx;
    const int py = obj.pos.y * kCellPx;
    switch (obj.kind) {
      case ObjectKind::Door: {
        const bool open = opened.contains(obj.id);
        out << "<rect class=\"door " << (open ? "open" : "closed") << "\" id=\"door-"
            << escape(obj.id) << "\" x=\"" << px + 1 << "\" y=\"" << py + 1 << "\" width=\""
            << kCellPx - 2 << "\" height=\"" << kCellPx - 2 << "\" fill=\""
            << (open ? "none" : "#8b5a2b") << "\" stroke=\"#8b5a2b\" stroke-width=\"2\""
            << (open ? " stroke-dasharray=\"3,2\"" : "") << "/>\n";
        break;
      }
      case ObjectKind::Button:
        out << "<circle class=\"button " << (obj.linked ? "linked" : "decoy") << "\" id=\"button-"
            << escape(obj.id) << "\" cx=\"" << px + kCellPx / 2 << "\" cy=\"" << py + kCellPx / 2
            << "\" r=\"" << kCellPx / 4 << "\" fill=\"" << (obj.linked ? "#d04040" : "#a0a0ff")
            << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        break;
      case ObjectKind::Goal:
        out << "<rect class=\"goal\" id=\"goal-" << escape(obj.id) << "\" x=\"" << px + 4
            << "\" y=\"" << py + 4 << "\" width=\"" << kCellPx - 8 << "\" height=\"" << kCellPx - 8
            << "\" fill=\"#000000\"/>\n";
        break;
    }
  }
  out << "</g>\n";

  out << "<polyline class=\"path\" fill=\"none\" stroke=\"#808080\" stroke-width=\"2\" points=\"";
  std::optional<GridPos> last;
  for (const auto& r : run.trace) {
    if (last == r.pos) continue;
    out << (last ? " " : "") << r.pos.x * kCellPx + kCellPx / 2 << ','
        << r.pos.y * kCellPx + kCellPx / 2;
    last = r.pos;
  }
  out << "\"/>\n<g class=\"trace\">\n";
  for (const auto& r : run.trace) {
    out << "<circle class=\"trace-point\" data-tick=\"" << r.tick << "\" cx=\""
        << r.pos.x * kCellPx + kCellPx / 2 << "\" cy=\"" << r.pos.y * kCellPx + kCellPx / 2
        << "\" r=\"5\" fill=\"" << to_hex(affect_to_color(r.valence, r.arousal, palette, lo, hi))
        << "\"/>\n";
  }
  out << "</g>\n";

  // Legend: 5x5 sample of the colour square, valence to the right, arousal up.
  const int top = level.height() * kCellPx + 8;
  const int swatch = 14;
  out << "<g class=\"legend\">\n";
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      const double v = lo + (hi - lo) * i / 4.0;
      const double a = hi - (hi - lo) * k / 4.0;
      out << "<rect x=\"" << 8 + i * swatch << "\" y=\"" << top + k * swatch << "\" width=\""
          << swatch << "\" height=\"" << swatch << "\" fill=\""
          << to_hex(affect_to_color(v, a, palette, lo, hi)) << "\"/>\n";
    }
  }
  out << "<text x=\"" << 16 + 5 * swatch << "\" y=\"" << top + 12
      << "\" font-family=\"sans-serif\" font-size=\"11\">arousal high</text>\n"
      << "<text x=\"" << 16 + 5 * swatch << "\" y=\"" << top + 5 * swatch
      << "\" font-family=\"sans-serif\" font-size=\"11\">arousal low</text>\n"
      << "<text x=\"8\" y=\"" << top + 5 * swatch + 16
      << "\" font-family=\"sans-serif\" font-size=\"11\">valence low to high</text>\n"
      << "</g>\n</svg>\n";
  return out.str();
}

std::string render_temporal(const RunResult& run, const TemporalStyle& style) {
  if (run.trace.empty()) throw Error("cannot render an empty trace");
  const double lo = run.config.appraisal.clamp_lo;
  const double hi = run.config.appraisal.clamp_hi;
  const double span = kTemporalPx - 2 * kMarginPx;
  auto px_x = [&](double v) { return kMarginPx + (v - lo) / (hi - lo) * span; };
  auto px_y = [&](double a) { return kMarginPx + (hi - a) / (hi - lo) * span; };

  std::ostringstream out;
  svg_open(out, kTemporalPx, kTemporalPx, "affect over time: " + run.map_id);

  out << "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n"
      << "<rect x=\"" << kMarginPx << "\" y=\"" << kMarginPx << "\" width=\"" << fmt(span)
      << "\" height=\"" << fmt(span) << "\" fill=\"none\"/>\n"
      << "<line class=\"quadrant\" x1=\"" << fmt(px_x(0)) << "\" y1=\"" << kMarginPx << "\" x2=\""
      << fmt(px_x(0)) << "\" y2=\"" << kMarginPx + span << "\" stroke-dasharray=\"4,3\"/>\n"
      << "<line class=\"quadrant\" x1=\"" << kMarginPx << "\" y1=\"" << fmt(px_y(0)) << "\" x2=\""
      << kMarginPx + span << "\" y2=\"" << fmt(px_y(0)) << "\" stroke-dasharray=\"4,3\"/>\n"
      << "</g>\n";
  out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<text x=\"" << kTemporalPx / 2 - 24 << "\" y=\"" << kTemporalPx - 12 << "\">valence</text>\n"
      << "<text x=\"12\" y=\"" << kTemporalPx / 2 << "\" transform=\"rotate(-90 12 "
      << kTemporalPx / 2 << ")\">arousal</text>\n"
      << "<text x=\"" << kMarginPx << "\" y=\"" << kMarginPx + span + 16 << "\">" << fmt(lo)
      << "</text>\n"
      << "<text x=\"" << kMarginPx + span - 24 << "\" y=\"" << kMarginPx + span + 16 << "\">"
      << fmt(hi) << "</text>\n"
      << "</g>\n";

  out << "<g class=\"dots\">\n";
  const std::size_t n = run.trace.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = run.trace[i];
    const double t = n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
    const Rgb c{channel(style.first.r + t * (style.last.r - style.first.r)),
                channel(style.first.g + t * (style.last.g - style.first.g)),
                channel(style.first.b + t * (style.last.b - style.first.b))};
    out << "<circle class=\"dot\" data-tick=\"" << r.tick << "\" cx=\""
        << fmt(px_x(std::clamp(r.valence, lo, hi))) << "\" cy=\""
        << fmt(px_y(std::clamp(r.arousal, lo, hi))) << "\" r=\"3\" fill=\"" << to_hex(c)
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace uxagent

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "uxagent/level.hpp"
#include "uxagent/trace.hpp"

namespace uxagent {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(Rgb, Rgb) = default;
};

/// `#rrggbb`, lower case.
std::string to_hex(Rgb c);
/// Parses `#rrggbb`; throws ParseError otherwise.
Rgb parse_hex(std::string_view text);

/// Corner colours of the valence/arousal square. The defaults are our own
/// choice: deep blue (low, low), red-orange (low valence, high arousal),
/// teal-green (high valence, low arousal), yellow (high, high).
struct AffectPalette {
  Rgb low_low{20, 40, 140};
  Rgb low_high{230, 80, 30};
  Rgb high_low{20, 160, 130};
  Rgb high_high{250, 220, 40};

  friend bool operator==(const AffectPalette&, const AffectPalette&) = default;
};

/// JSON object `{"low_low": "#rrggbb", ...}`; missing corners keep their default.
AffectPalette parse_palette(std::string_view json_text);

/// Bilinear blend of the palette corners over the clamp square, rounded to the
/// nearest 8-bit value. Throws Error outside [lo, hi].
Rgb affect_to_color(double valence, double arousal, const AffectPalette& palette,
                    double lo = -5.0, double hi = 5.0);

struct TemporalStyle {
  Rgb first{0, 0, 0};
  Rgb last{120, 180, 255};
};

constexpr int kCellPx = 24;
constexpr int kTemporalPx = 640;

/// Top-down map with the visited cells, one dot per tick coloured by affect.
/// Doors opened during the run are drawn open. Throws Error when a trace
/// position falls outside the level.
std::string render_spatial(const Level& level, const RunResult& run,
                           const AffectPalette& palette = {});

/// Valence/arousal scatter, one dot per tick, fading from style.first at the
/// first tick to style.last at the final one. Throws Error on an empty trace.
std::string render_temporal(const RunResult& run, const TemporalStyle& style = {});

}  // namespace uxagent

#include "uxagent/affect.hpp"

#include <algorithm>
#include <cmath>

#include "uxagent/error.hpp"

namespace uxagent {

namespace {

// Idle timers accumulate tick lengths like 0.1 that are inexact in binary.
constexpr double kTimerSlack = 1e-9;

// Values live on a 1e-9 grid so repeated 0.4 steps land on the decimal they
// name (-1.2, not -1.2000000000000002).
double snap(double x) { return std::round(x * 1e9) / 1e9; }

}  // namespace

void AppraisalConfig::check() const {
  if (!(decay_window_s > 0.0)) throw Error("decay_window_s must be positive");
  if (!(clamp_lo < clamp_hi)) throw Error("clamp_lo must be below clamp_hi");
}

AffectState apply_events(AffectState state, std::span<const SimEvent> events,
                         const AppraisalConfig& cfg) {
  for (const auto& event : events) {
    switch (event.kind) {
      case EventKind::DoorOpened:
      case EventKind::GoalFound:
        state.valence += cfg.valence_gain;
        state.valence_idle_s = 0.0;
        break;
      case EventKind::NewInteractablePerceived:
        state.arousal += cfg.arousal_gain;
        state.arousal_idle_s = 0.0;
        break;
      case EventKind::ButtonPressedNoEffect:
        break;
    }
  }
  state.valence = std::clamp(snap(state.valence), cfg.clamp_lo, cfg.clamp_hi);
  state.arousal = std::clamp(snap(state.arousal), cfg.clamp_lo, cfg.clamp_hi);
  return state;
}

AffectState tick_decay(AffectState state, double dt, const AppraisalConfig& cfg) {
  auto decay = [&](double& value, double& idle) {
    idle = snap(idle + dt);
    if (idle + kTimerSlack >= cfg.decay_window_s) {
      value = std::max(cfg.clamp_lo, snap(value - cfg.decay_amount));
      idle = 0.0;
    }
  };
  decay(state.valence, state.valence_idle_s);
  decay(state.arousal, state.arousal_idle_s);
  return state;
}

}  // namespace uxagent

#pragma once

#include <span>

#include "uxagent/events.hpp"

namespace uxagent {

/// Appraisal constants. Defaults: +1 per qualifying event, -0.4 after every
/// 10 s without one, both dimensions clamped to [-5, 5].
struct AppraisalConfig {
  double valence_gain = 1.0;
  double arousal_gain = 1.0;
  double decay_amount = 0.4;
  double decay_window_s = 10.0;
  double clamp_lo = -5.0;
  double clamp_hi = 5.0;

  /// Throws Error unless decay_window_s > 0 and clamp_lo < clamp_hi.
  void check() const;

  friend bool operator==(const AppraisalConfig&, const AppraisalConfig&) = default;
};

/// Core affect: valence (goal progress) and arousal (novelty), each with the
/// time elapsed since its last qualifying event or decay step. Values and
/// timers are rounded to multiples of 1e-9 after every update.
struct AffectState {
  double valence = 0.0;
  double arousal = 0.0;
  double valence_idle_s = 0.0;
  double arousal_idle_s = 0.0;

  friend bool operator==(const AffectState&, const AffectState&) = default;
};

/// Neutral affect at spawn.
constexpr AffectState initial_affect() { return {}; }

/// Applies one tick's events. DoorOpened and GoalFound raise valence,
/// NewInteractablePerceived raises arousal; each resets its own dimension's
/// idle timer. Increments stack before the result is clamped.
AffectState apply_events(AffectState state, std::span<const SimEvent> events,
                         const AppraisalConfig& cfg);

/// Advances both idle timers by `dt`. A timer that reaches the decay window
/// costs its dimension one decay_amount (floored at clamp_lo) and restarts.
AffectState tick_decay(AffectState state, double dt, const AppraisalConfig& cfg);

}  // namespace uxagent

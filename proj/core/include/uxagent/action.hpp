#pragma once

#include <string>
#include <variant>

#include "uxagent/grid.hpp"

namespace uxagent {

/// Step toward an adjacent cell. The engine completes the move once the agent
/// has issued it for a full move period.
struct Move {
  GridPos target;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Interact with a button on the agent's cell or a 4-adjacent one.
struct Press {
  std::string button_id;
  friend bool operator==(const Press&, const Press&) = default;
};

struct Wait {
  friend bool operator==(const Wait&, const Wait&) = default;
};

using AgentAction = std::variant<Move, Press, Wait>;

}  // namespace uxagent

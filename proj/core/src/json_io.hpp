#pragma once

// nlohmann::json adapters shared by the serialising translation units. Not installed.

#include <json.hpp>

#include "uxagent/config.hpp"
#include "uxagent/trace.hpp"

namespace uxagent {

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

nlohmann::json run_to_json(const RunResult& run);

}  // namespace uxagent

#pragma once

#include <string>
#include <vector>

#include "risradar/scenario.hpp"

namespace risradar {

/// Result of loading a config document: the ready-to-evaluate scenario
/// plus any non-fatal warnings (for example a cell pitch outside the
/// customary band).
struct LoadedScenario {
    Scenario scenario;
    std::vector<std::string> warnings;
};

/// Parses and validates a JSON scenario document. All dB-valued fields
/// are converted to linear exactly once, here. Throws ConfigError carrying
/// a line:column position for parse failures and the offending field path
/// for schema violations.
LoadedScenario load_scenario_file(const std::string& path);

/// Same, from an in-memory document; `name` labels error messages.
LoadedScenario load_scenario_text(const std::string& text, const std::string& name);

} // namespace risradar

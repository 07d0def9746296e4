#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aglab/enumerate.hpp"
#include "aglab/harness.hpp"

namespace aglab {

/*
 * Reports serialize to ordered JSON keyed by check name, in the order
 * the harness runs them. to_string and from_string round-trip
 * byte-identically: parse(dump(r)) re-dumps to the same bytes.
 */
nlohmann::ordered_json report_to_json(const TheoremReport& report);
TheoremReport report_from_json(const nlohmann::ordered_json& j);
std::string report_to_string(const TheoremReport& report);
TheoremReport report_from_string(const std::string& text);

nlohmann::ordered_json scenarios_to_json(const std::vector<ScenarioResult>& scenarios);
nlohmann::ordered_json stats_to_json(const EnumerationStats& stats);

// Human-readable forms; element labels instead of indices.
std::string render_report_text(const TheoremReport& report);
std::string render_scenarios_text(const std::vector<ScenarioResult>& scenarios);

} // namespace aglab

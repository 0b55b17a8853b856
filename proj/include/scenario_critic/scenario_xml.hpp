#pragma once

#include <string>
#include <vector>

#include "scenario_critic/scenario.hpp"

namespace scenario_critic {

struct ParsedScenario {
    Scenario scenario;
    std::vector<std::string> warnings;  // unknown elements, one entry each
};

/// Reads the supported CommonRoad-style XML subset: lanelets with boundary
/// polylines and topology refs, traffic signs as opaque (id, position),
/// static/dynamic obstacles with rectangle shape and state list, the planning
/// problem, and an optional egoVehicle extension carrying the ego trajectory.
/// Unknown elements are collected as warnings. Throws IoError with the
/// element path on malformed input and ValidationError when the resulting
/// scenario breaks a model invariant.
ParsedScenario parse_commonroad_xml(const std::string& xml_text);

ParsedScenario load_scenario_xml(const std::string& path);

/// Serializes a scenario to the same subset. parse(write(s)) reproduces s
/// field-for-field (floats to 1e-9 relative). Throws ValidationError when
/// the scenario does not validate.
std::string write_scenario_xml(const Scenario& s);

void save_scenario_xml(const Scenario& s, const std::string& path);

}  // namespace scenario_critic

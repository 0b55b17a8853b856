#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scenario_critic/geometry.hpp"

namespace scenario_critic {

enum class ObstacleKind { Car, Truck, Bus, Bicycle, Pedestrian, Motorcycle, Static };

const char* to_string(ObstacleKind kind);
std::optional<ObstacleKind> obstacle_kind_from_string(const std::string& name);

struct StateSample {
    int t{0};
    Vec2 position;
    double orientation{0.0};   // rad, normalized to (-pi, pi]
    double velocity{0.0};      // m/s, scalar speed along heading
    double acceleration{0.0};  // m/s^2

    Vec2 velocity_vector() const {
        return {velocity * std::cos(orientation), velocity * std::sin(orientation)};
    }
};

struct Lanelet {
    int id{0};
    std::vector<Vec2> left_boundary;
    std::vector<Vec2> right_boundary;
    std::vector<Vec2> centerline;
    std::vector<int> predecessor_ids;
    std::vector<int> successor_ids;
    std::optional<int> adjacent_left_id;
    std::optional<int> adjacent_right_id;

    /// Closed boundary polygon: left boundary followed by the reversed right.
    std::vector<Vec2> polygon() const;
};

struct TrafficSign {
    int id{0};
    Vec2 position;
};

struct Obstacle {
    int id{0};
    ObstacleKind kind{ObstacleKind::Car};
    double length{0.0};
    double width{0.0};
    std::vector<StateSample> states;

    const StateSample* state_at(int t) const;
    int first_timestep() const { return states.empty() ? 0 : states.front().t; }
    int last_timestep() const { return states.empty() ? -1 : states.back().t; }
};

struct EgoRecord {
    int id{0};
    double length{0.0};
    double width{0.0};
    std::vector<StateSample> states;
    std::map<int, int> lanelet_id_at;  // timestep -> lanelet id

    const StateSample* state_at(int t) const;
};

struct GoalRegion {
    OrientedBox region;
    int time_start{0};
    int time_end{0};
};

struct PlanningProblem {
    StateSample initial_state;
    GoalRegion goal;
};

struct Scenario {
    std::string id;
    double timestep_s{0.1};
    std::vector<Lanelet> lanelets;
    std::vector<TrafficSign> traffic_signs;  // stored, unused by evaluation
    std::vector<Obstacle> obstacles;
    EgoRecord ego;
    PlanningProblem planning_problem;

    const Lanelet* lanelet_by_id(int id) const;
    const Obstacle* obstacle_by_id(int id) const;
};

struct Violation {
    std::string field;
    std::string rule;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks every structural invariant of the scenario model and reports each
/// breach with the offending field and the violated rule.
ValidationReport validate_scenario(const Scenario& s);

/// Footprint of a length x width rectangle posed at the given state.
/// Throws std::invalid_argument for non-positive dimensions.
OrientedBox footprint_at(double length, double width, const StateSample& state);

/// First lanelet whose boundary polygon contains the point, nullptr if none.
const Lanelet* lanelet_containing(const Scenario& s, const Vec2& p);

/// Lanelet id at a point, or -1 when the point is off the map.
int lanelet_id_for(const Scenario& s, const Vec2& p);

/// Walks predecessors and successors from the given lanelet to form an
/// ordered chain through the map (first successor wins at branches).
std::vector<const Lanelet*> lanelet_chain_through(const Scenario& s, int lanelet_id);

enum class RunOutcome { ReachedGoal, Collision, Other };

const char* to_string(RunOutcome outcome);
std::optional<RunOutcome> run_outcome_from_string(const std::string& name);

/// One simulated execution of a scenario: the unit of evaluation. The
/// referenced scenario already carries the simulated ego/obstacle states and
/// is immutable, so runs can be shared freely across threads.
struct SimulationRun {
    std::shared_ptr<const Scenario> scenario;
    int horizon{0};  // number of timesteps, ego states cover [0, horizon)
    RunOutcome outcome{RunOutcome::Other};
    std::optional<int> collision_timestep;
    std::optional<int> collision_obstacle_id;

    const StateSample& ego_state(int t) const { return scenario->ego.states.at(static_cast<std::size_t>(t)); }
    OrientedBox ego_footprint(int t) const;
};

/// Builds a run directly from a scenario (horizon = ego state count).
/// The outcome is left as Other; callers label it via collision_scan.
SimulationRun make_run(std::shared_ptr<const Scenario> scenario);

}  // namespace scenario_critic

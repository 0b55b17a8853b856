#pragma once

// Programmatic scenario builders shared by the unit and acceptance suites.

#include <memory>
#include <string>
#include <vector>

#include "scenario_critic/metrics.hpp"
#include "scenario_critic/scenario.hpp"

namespace fixtures {

using namespace scenario_critic;

/// Straight lanelet along +x spanning [x0, x1] centered on y_center.
Lanelet straight_lanelet(int id, double x0, double x1, double y_center,
                         double width = 4.0, int n_points = 5);

/// Constant-velocity states along the heading, one per timestep.
std::vector<StateSample> constant_velocity_states(Vec2 start, double heading,
                                                  double speed, int n_steps,
                                                  double dt = 0.1, int t0 = 0);

/// Two parallel straight lanes (ids 1 and 2, y = 0 and y = 3.5), ego in lane
/// 1 driving +x at 10 m/s for `horizon` steps. No obstacles.
std::shared_ptr<Scenario> two_lane_scenario(const std::string& id, int horizon);

Obstacle static_obstacle(int id, Vec2 position, double heading = 0.0,
                         int n_steps = 1, double length = 4.0, double width = 2.0);

Obstacle moving_obstacle(int id, Vec2 start, double heading, double speed,
                         int n_steps, double dt = 0.1, double length = 4.0,
                         double width = 2.0);

/// Collision fixture used across the suites: ego driving +x at 10 m/s rams
/// static obstacle 30210; first footprint overlap at t = 11.
SimulationRun collision_run_t11(const std::string& id = "fixture_collision");

/// Safe variant: the obstacle sits in the adjacent lane, constant 3.5 m
/// lateral offset.
SimulationRun safe_parallel_run(const std::string& id = "fixture_safe");

/// Safe two-vehicle fixture for the generation pipeline: ego in lane 1, one
/// candidate attacker cruising ahead in lane 2.
SimulationRun generation_fixture(const std::string& id = "fixture_generation");

SimulationRun run_from(std::shared_ptr<Scenario> scenario);

}  // namespace fixtures

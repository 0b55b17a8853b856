#include "support/fixtures.hpp"

#include <cmath>

namespace fixtures {

Lanelet straight_lanelet(int id, double x0, double x1, double y_center,
                         double width, int n_points) {
    Lanelet l;
    l.id = id;
    for (int i = 0; i < n_points; ++i) {
        const double x = x0 + (x1 - x0) * i / (n_points - 1);
        l.left_boundary.push_back({x, y_center + width / 2.0});
        l.right_boundary.push_back({x, y_center - width / 2.0});
        l.centerline.push_back({x, y_center});
    }
    return l;
}

std::vector<StateSample> constant_velocity_states(Vec2 start, double heading,
                                                  double speed, int n_steps,
                                                  double dt, int t0) {
    std::vector<StateSample> states;
    const Vec2 dir{std::cos(heading), std::sin(heading)};
    for (int i = 0; i < n_steps; ++i) {
        StateSample st;
        st.t = t0 + i;
        st.position = start + dir * (speed * dt * i);
        st.orientation = heading;
        st.velocity = speed;
        st.acceleration = 0.0;
        states.push_back(st);
    }
    return states;
}

std::shared_ptr<Scenario> two_lane_scenario(const std::string& id, int horizon) {
    auto s = std::make_shared<Scenario>();
    s->id = id;
    s->timestep_s = 0.1;
    Lanelet lane1 = straight_lanelet(1, -20.0, 180.0, 0.0);
    Lanelet lane2 = straight_lanelet(2, -20.0, 180.0, 3.5);
    lane1.adjacent_left_id = 2;
    lane2.adjacent_right_id = 1;
    s->lanelets = {lane1, lane2};

    s->ego.id = 100;
    s->ego.length = 4.0;
    s->ego.width = 2.0;
    s->ego.states = constant_velocity_states({0.0, 0.0}, 0.0, 10.0, horizon);
    for (const StateSample& st : s->ego.states) {
        s->ego.lanelet_id_at[st.t] = lanelet_id_for(*s, st.position);
    }

    s->planning_problem.initial_state = s->ego.states.front();
    s->planning_problem.goal.region =
        OrientedBox{{s->ego.states.back().position.x + 10.0, 0.0}, 5.0, 2.0, 0.0};
    s->planning_problem.goal.time_start = 0;
    s->planning_problem.goal.time_end = horizon - 1;
    return s;
}

Obstacle static_obstacle(int id, Vec2 position, double heading, int n_steps,
                         double length, double width) {
    Obstacle o;
    o.id = id;
    o.kind = ObstacleKind::Static;
    o.length = length;
    o.width = width;
    o.states = constant_velocity_states(position, heading, 0.0, n_steps);
    return o;
}

Obstacle moving_obstacle(int id, Vec2 start, double heading, double speed,
                         int n_steps, double dt, double length, double width) {
    Obstacle o;
    o.id = id;
    o.kind = ObstacleKind::Car;
    o.length = length;
    o.width = width;
    o.states = constant_velocity_states(start, heading, speed, n_steps, dt);
    return o;
}

SimulationRun run_from(std::shared_ptr<Scenario> scenario) {
    return make_run(std::move(scenario));
}

SimulationRun collision_run_t11(const std::string& id) {
    auto s = two_lane_scenario(id, 20);
    // Ego advances 1 m per step; centers 3.9 m apart at t = 11 gives the
    // first 4 m-long footprint overlap there and nowhere earlier.
    s->obstacles.push_back(static_obstacle(30210, {14.9, 0.0}, 0.0, 20));
    SimulationRun run = run_from(s);
    run.outcome = RunOutcome::Collision;
    run.collision_timestep = 11;
    run.collision_obstacle_id = 30210;
    return run;
}

SimulationRun safe_parallel_run(const std::string& id) {
    auto s = two_lane_scenario(id, 20);
    // Exactly alongside the ego for the whole run: constant 1.5 m gap.
    s->obstacles.push_back(moving_obstacle(30211, {0.0, 3.5}, 0.0, 10.0, 20));
    SimulationRun run = run_from(s);
    run.outcome = RunOutcome::ReachedGoal;
    return run;
}

SimulationRun generation_fixture(const std::string& id) {
    auto s = two_lane_scenario(id, 30);
    // Candidate attacker ahead in the adjacent lane, same speed: safe as
    // recorded, but in range and to the side of the ego throughout.
    s->obstacles.push_back(moving_obstacle(30210, {12.0, 3.5}, 0.0, 10.0, 30));
    SimulationRun run = run_from(s);
    run.outcome = RunOutcome::ReachedGoal;
    return run;
}

}  // namespace fixtures

#include "scenario_critic/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace scenario_critic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* to_string(ObstacleKind kind) {
    switch (kind) {
        case ObstacleKind::Car: return "car";
        case ObstacleKind::Truck: return "truck";
        case ObstacleKind::Bus: return "bus";
        case ObstacleKind::Bicycle: return "bicycle";
        case ObstacleKind::Pedestrian: return "pedestrian";
        case ObstacleKind::Motorcycle: return "motorcycle";
        case ObstacleKind::Static: return "static";
    }
    return "car";
}

std::optional<ObstacleKind> obstacle_kind_from_string(const std::string& name) {
    if (name == "car") return ObstacleKind::Car;
    if (name == "truck") return ObstacleKind::Truck;
    if (name == "bus") return ObstacleKind::Bus;
    if (name == "bicycle") return ObstacleKind::Bicycle;
    if (name == "pedestrian") return ObstacleKind::Pedestrian;
    if (name == "motorcycle") return ObstacleKind::Motorcycle;
    if (name == "static") return ObstacleKind::Static;
    return std::nullopt;
}

const char* to_string(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::ReachedGoal: return "reached_goal";
        case RunOutcome::Collision: return "collision";
        case RunOutcome::Other: return "other";
    }
    return "other";
}

std::optional<RunOutcome> run_outcome_from_string(const std::string& name) {
    if (name == "reached_goal") return RunOutcome::ReachedGoal;
    if (name == "collision") return RunOutcome::Collision;
    if (name == "other") return RunOutcome::Other;
    return std::nullopt;
}

std::vector<Vec2> Lanelet::polygon() const {
    std::vector<Vec2> poly = left_boundary;
    poly.insert(poly.end(), right_boundary.rbegin(), right_boundary.rend());
    return poly;
}

namespace {

const StateSample* find_state(const std::vector<StateSample>& states, int t) {
    if (states.empty()) return nullptr;
    const int first = states.front().t;
    const int idx = t - first;
    if (idx < 0 || idx >= static_cast<int>(states.size())) return nullptr;
    const StateSample& s = states[static_cast<std::size_t>(idx)];
    // Contiguity is a validated invariant; fall back to search if violated.
    if (s.t == t) return &s;
    const auto it = std::find_if(states.begin(), states.end(),
                                 [t](const StateSample& x) { return x.t == t; });
    return it == states.end() ? nullptr : &*it;
}

}  // namespace

const StateSample* Obstacle::state_at(int t) const { return find_state(states, t); }
const StateSample* EgoRecord::state_at(int t) const { return find_state(states, t); }

const Lanelet* Scenario::lanelet_by_id(int lanelet_id) const {
    for (const Lanelet& l : lanelets) {
        if (l.id == lanelet_id) return &l;
    }
    return nullptr;
}

const Obstacle* Scenario::obstacle_by_id(int obstacle_id) const {
    for (const Obstacle& o : obstacles) {
        if (o.id == obstacle_id) return &o;
    }
    return nullptr;
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const Violation& v : violations) {
        out << v.field << ": " << v.rule << "\n";
    }
    return out.str();
}

namespace {

void check_states(const std::string& prefix, const std::vector<StateSample>& states,
                  std::vector<Violation>& out) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        const StateSample& st = states[i];
        if (!(st.orientation > -kPi && st.orientation <= kPi + 1e-12)) {
            out.push_back({prefix + ".states[" + std::to_string(i) + "].orientation",
                           "orientation normalized to (-pi, pi]"});
        }
        if (st.velocity < 0.0) {
            out.push_back({prefix + ".states[" + std::to_string(i) + "].velocity",
                           "velocity >= 0"});
        }
        if (i > 0 && states[i].t != states[i - 1].t + 1) {
            out.push_back({prefix + ".states[" + std::to_string(i) + "].t",
                           "state timesteps strictly increasing and contiguous"});
        }
    }
}

void check_body(const std::string& prefix, double length, double width,
                std::vector<Violation>& out) {
    if (!(length > 0.0)) out.push_back({prefix + ".length", "length > 0"});
    if (!(width > 0.0)) out.push_back({prefix + ".width", "width > 0"});
}

}  // namespace

ValidationReport validate_scenario(const Scenario& s) {
    ValidationReport report;
    auto& out = report.violations;

    if (s.id.empty()) out.push_back({"id", "id non-empty"});
    if (!(s.timestep_s > 0.0)) out.push_back({"timestep_s", "timestep_s > 0"});

    std::set<int> lanelet_ids;
    for (const Lanelet& l : s.lanelets) {
        const std::string prefix = "lanelet[" + std::to_string(l.id) + "]";
        if (!lanelet_ids.insert(l.id).second) {
            out.push_back({prefix + ".id", "lanelet ids unique"});
        }
        if (l.centerline.size() < 2) {
            out.push_back({prefix + ".centerline", "centerline has >= 2 points"});
        }
        if (l.left_boundary.size() != l.centerline.size() ||
            l.right_boundary.size() != l.centerline.size()) {
            out.push_back({prefix + ".boundaries",
                           "left/right/center polylines have equal point counts"});
        }
        for (std::size_t i = 1; i < l.centerline.size(); ++i) {
            if ((l.centerline[i] - l.centerline[i - 1]).norm() <= 0.0) {
                out.push_back({prefix + ".centerline[" + std::to_string(i) + "]",
                               "consecutive centerline points are distinct"});
            }
        }
    }

    std::set<int> obstacle_ids;
    for (const Obstacle& o : s.obstacles) {
        const std::string prefix = "obstacle[" + std::to_string(o.id) + "]";
        if (!obstacle_ids.insert(o.id).second) {
            out.push_back({prefix + ".id", "obstacle ids unique"});
        }
        if (o.id == s.ego.id) {
            out.push_back({prefix + ".id", "obstacle ids distinct from ego id"});
        }
        check_body(prefix, o.length, o.width, out);
        check_states(prefix, o.states, out);
    }

    check_body("ego", s.ego.length, s.ego.width, out);
    check_states("ego", s.ego.states, out);
    for (const auto& [t, lanelet_id] : s.ego.lanelet_id_at) {
        if (s.ego.state_at(t) == nullptr) {
            out.push_back({"ego.lanelet_id_at[" + std::to_string(t) + "]",
                           "lanelet_id_at keys subset of state timesteps"});
        }
    }

    if (s.planning_problem.goal.time_start > s.planning_problem.goal.time_end) {
        out.push_back({"planning_problem.goal", "goal time interval non-empty"});
    }

    return report;
}

OrientedBox footprint_at(double length, double width, const StateSample& state) {
    if (!(length > 0.0) || !(width > 0.0)) {
        throw std::invalid_argument("footprint_at: dimensions must be positive");
    }
    return OrientedBox{state.position, length / 2.0, width / 2.0, state.orientation};
}

const Lanelet* lanelet_containing(const Scenario& s, const Vec2& p) {
    for (const Lanelet& l : s.lanelets) {
        const auto poly = l.polygon();
        if (point_in_polygon(p, poly)) return &l;
    }
    return nullptr;
}

int lanelet_id_for(const Scenario& s, const Vec2& p) {
    const Lanelet* l = lanelet_containing(s, p);
    return l != nullptr ? l->id : -1;
}

std::vector<const Lanelet*> lanelet_chain_through(const Scenario& s, int lanelet_id) {
    const Lanelet* seed = s.lanelet_by_id(lanelet_id);
    if (seed == nullptr) return {};

    std::vector<const Lanelet*> chain{seed};
    std::set<int> visited{seed->id};

    const Lanelet* cur = seed;
    while (!cur->predecessor_ids.empty()) {
        const Lanelet* pred = s.lanelet_by_id(cur->predecessor_ids.front());
        if (pred == nullptr || !visited.insert(pred->id).second) break;
        chain.insert(chain.begin(), pred);
        cur = pred;
    }
    cur = seed;
    while (!cur->successor_ids.empty()) {
        const Lanelet* succ = s.lanelet_by_id(cur->successor_ids.front());
        if (succ == nullptr || !visited.insert(succ->id).second) break;
        chain.push_back(succ);
        cur = succ;
    }
    return chain;
}

OrientedBox SimulationRun::ego_footprint(int t) const {
    return footprint_at(scenario->ego.length, scenario->ego.width, ego_state(t));
}

SimulationRun make_run(std::shared_ptr<const Scenario> scenario) {
    SimulationRun run;
    run.horizon = static_cast<int>(scenario->ego.states.size());
    run.scenario = std::move(scenario);
    return run;
}

}  // namespace scenario_critic

#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scenario_critic/scenario.hpp"

namespace scenario_critic {

/// Inclusive timestep range.
struct StepRange {
    int first{0};
    int last{0};
    int count() const { return last - first + 1; }
    bool contains(int t) const { return t >= first && t <= last; }
};

struct SafetyMetricSample {
    int t{0};
    int obstacle_id{0};
    double ttc{std::numeric_limits<double>::infinity()};  // seconds
    double mdc{0.0};                                      // meters
    int risk{5};                                          // 0 collision .. 5 very low
};

struct CollisionLabel {
    bool collided{false};
    std::optional<int> t;
    std::optional<int> obstacle_id;
};

/// Closing speeds below this are treated as not closing.
inline constexpr double kClosingSpeedDeadband = 0.1;  // m/s

// Risk band edges. A value above edge[i] (band 5 down to 1) maps to band
// 5 - i; contact (exact zero) maps to band 0.
inline constexpr double kTtcBandEdges[5] = {5.0, 3.0, 1.5, 0.5, 0.0};
inline constexpr double kMdcBandEdges[5] = {5.0, 3.0, 1.0, 0.5, 0.0};

int ttc_band(double ttc);
int mdc_band(double mdc);

/// Overall 0-5 risk score: the more pessimistic of the two bands.
int risk_from_metrics(double ttc, double mdc);

/// Human-readable name of a risk band (0 = "collision" .. 5 = "negligible risk").
const char* risk_band_name(int risk);

/// Time to collision under constant velocities, projected on the current
/// line of sight: closing speed c = -(r.v)/|r| (obstacle minus ego); returns
/// +infinity when c is below the deadband, else (|r| - contact_distance)/c
/// with the remaining gap clamped at zero. With `longitudinal_only` the
/// relative motion is first projected onto the ego heading axis.
double compute_ttc(const OrientedBox& ego_box, const Vec2& ego_velocity,
                   const OrientedBox& obs_box, const Vec2& obs_velocity,
                   bool longitudinal_only = false);

/// Minimum footprint-to-footprint distance over the window. Throws
/// std::invalid_argument when the window shares no timestep with both tracks.
double compute_mdc(const EgoRecord& ego, const Obstacle& obstacle, StepRange window);

struct ScoreOptions {
    double radius_m{30.0};
    int history_steps{10};
    bool ttc_longitudinal{false};
};

/// First timestep (earliest t, then smallest obstacle id) at which the ego
/// footprint intersects an obstacle footprint.
CollisionLabel collision_scan(const SimulationRun& run);

/// Per-timestep TTC/MDC/risk samples for every obstacle within radius_m of
/// the ego (center distance). MDC is the minimum footprint distance over the
/// trailing history window; TTC is instantaneous.
std::vector<SafetyMetricSample> score_run(const SimulationRun& run,
                                          const ScoreOptions& options = {});

// Batch kernels over whole datasets. The *_serial variants are the reference
// implementations; the unsuffixed ones run the per-run loop under OpenMP and
// must produce identical output.
std::vector<CollisionLabel> scan_runs_serial(std::span<const SimulationRun> runs);
std::vector<CollisionLabel> scan_runs(std::span<const SimulationRun> runs,
                                      int n_threads = 0);
std::vector<std::vector<SafetyMetricSample>> score_runs_serial(
    std::span<const SimulationRun> runs, const ScoreOptions& options = {});
std::vector<std::vector<SafetyMetricSample>> score_runs(
    std::span<const SimulationRun> runs, const ScoreOptions& options = {},
    int n_threads = 0);

/// CSV dump, columns: run_id,t,obstacle_id,ttc,mdc,risk.
std::string metrics_csv(const std::string& run_id,
                        std::span<const SafetyMetricSample> samples);

}  // namespace scenario_critic

#include "scenario_critic/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scenario_critic {

namespace {

int band_from_edges(double value, const double (&edges)[5]) {
    if (value == 0.0) return 0;
    for (int i = 0; i < 5; ++i) {
        if (value > edges[i]) return 5 - i;
    }
    return 0;  // negative input, treated as contact
}

}  // namespace

int ttc_band(double ttc) { return band_from_edges(ttc, kTtcBandEdges); }
int mdc_band(double mdc) { return band_from_edges(mdc, kMdcBandEdges); }

int risk_from_metrics(double ttc, double mdc) {
    return std::min(ttc_band(ttc), mdc_band(mdc));
}

const char* risk_band_name(int risk) {
    switch (risk) {
        case 0: return "collision";
        case 1: return "extreme risk";
        case 2: return "high risk";
        case 3: return "medium risk";
        case 4: return "low risk";
        default: return "negligible risk";
    }
}

double compute_ttc(const OrientedBox& ego_box, const Vec2& ego_velocity,
                   const OrientedBox& obs_box, const Vec2& obs_velocity,
                   bool longitudinal_only) {
    Vec2 r = obs_box.center - ego_box.center;
    Vec2 v = obs_velocity - ego_velocity;
    if (longitudinal_only) {
        const Vec2 axis = ego_box.long_axis();
        r = axis * r.dot(axis);
        v = axis * v.dot(axis);
    }
    const double dist = r.norm();
    if (dist <= 0.0) return 0.0;

    const double closing = -r.dot(v) / dist;
    if (closing <= kClosingSpeedDeadband) {
        return std::numeric_limits<double>::infinity();
    }
    const double contact = contact_distance_along(ego_box, obs_box, r);
    const double gap = std::max(0.0, dist - contact);
    return gap / closing;
}

double compute_mdc(const EgoRecord& ego, const Obstacle& obstacle, StepRange window) {
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (int t = window.first; t <= window.last; ++t) {
        const StateSample* es = ego.state_at(t);
        const StateSample* os = obstacle.state_at(t);
        if (es == nullptr || os == nullptr) continue;
        any = true;
        best = std::min(best, min_box_distance(footprint_at(ego.length, ego.width, *es),
                                               footprint_at(obstacle.length, obstacle.width, *os)));
    }
    if (!any) throw std::invalid_argument("compute_mdc: empty window");
    return best;
}

CollisionLabel collision_scan(const SimulationRun& run) {
    const Scenario& s = *run.scenario;
    // Obstacles in ascending id order so within-timestep ties are stable.
    std::vector<const Obstacle*> obstacles;
    obstacles.reserve(s.obstacles.size());
    for (const Obstacle& o : s.obstacles) obstacles.push_back(&o);
    std::sort(obstacles.begin(), obstacles.end(),
              [](const Obstacle* a, const Obstacle* b) { return a->id < b->id; });

    for (int t = 0; t < run.horizon; ++t) {
        const StateSample* es = s.ego.state_at(t);
        if (es == nullptr) continue;
        const OrientedBox ego_box = footprint_at(s.ego.length, s.ego.width, *es);
        for (const Obstacle* o : obstacles) {
            const StateSample* os = o->state_at(t);
            if (os == nullptr) continue;
            if (oriented_boxes_intersect(ego_box, footprint_at(o->length, o->width, *os))) {
                return {true, t, o->id};
            }
        }
    }
    return {};
}

std::vector<SafetyMetricSample> score_run(const SimulationRun& run,
                                          const ScoreOptions& options) {
    const Scenario& s = *run.scenario;
    std::vector<const Obstacle*> obstacles;
    obstacles.reserve(s.obstacles.size());
    for (const Obstacle& o : s.obstacles) obstacles.push_back(&o);
    std::sort(obstacles.begin(), obstacles.end(),
              [](const Obstacle* a, const Obstacle* b) { return a->id < b->id; });

    // Per-obstacle instantaneous footprint distances, reused for the
    // windowed MDC minimum.
    std::map<int, std::vector<double>> distances;

    std::vector<SafetyMetricSample> samples;
    for (const Obstacle* o : obstacles) {
        auto& dist = distances[o->id];
        dist.assign(static_cast<std::size_t>(run.horizon),
                    std::numeric_limits<double>::infinity());
        for (int t = 0; t < run.horizon; ++t) {
            const StateSample* es = s.ego.state_at(t);
            const StateSample* os = o->state_at(t);
            if (es == nullptr || os == nullptr) continue;
            dist[static_cast<std::size_t>(t)] =
                min_box_distance(footprint_at(s.ego.length, s.ego.width, *es),
                                 footprint_at(o->length, o->width, *os));
        }
    }

    for (int t = 0; t < run.horizon; ++t) {
        const StateSample* es = s.ego.state_at(t);
        if (es == nullptr) continue;
        const OrientedBox ego_box = footprint_at(s.ego.length, s.ego.width, *es);
        for (const Obstacle* o : obstacles) {
            const StateSample* os = o->state_at(t);
            if (os == nullptr) continue;
            if ((os->position - es->position).norm() > options.radius_m) continue;

            const OrientedBox obs_box = footprint_at(o->length, o->width, *os);
            const double ttc = compute_ttc(ego_box, es->velocity_vector(), obs_box,
                                           os->velocity_vector(), options.ttc_longitudinal);

            const auto& dist = distances[o->id];
            double mdc = std::numeric_limits<double>::infinity();
            for (int h = std::max(0, t - options.history_steps); h <= t; ++h) {
                mdc = std::min(mdc, dist[static_cast<std::size_t>(h)]);
            }

            samples.push_back({t, o->id, ttc, mdc, risk_from_metrics(ttc, mdc)});
        }
    }
    return samples;
}

std::vector<CollisionLabel> scan_runs_serial(std::span<const SimulationRun> runs) {
    std::vector<CollisionLabel> labels(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) labels[i] = collision_scan(runs[i]);
    return labels;
}

std::vector<CollisionLabel> scan_runs(std::span<const SimulationRun> runs, int n_threads) {
    std::vector<CollisionLabel> labels(runs.size());
#ifdef _OPENMP
    const std::int64_t n = static_cast<std::int64_t>(runs.size());
#pragma omp parallel for schedule(dynamic) num_threads(n_threads > 0 ? n_threads : omp_get_max_threads())
    for (std::int64_t i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = collision_scan(runs[static_cast<std::size_t>(i)]);
    }
#else
    (void)n_threads;
    labels = scan_runs_serial(runs);
#endif
    return labels;
}

std::vector<std::vector<SafetyMetricSample>> score_runs_serial(
    std::span<const SimulationRun> runs, const ScoreOptions& options) {
    std::vector<std::vector<SafetyMetricSample>> scores(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) scores[i] = score_run(runs[i], options);
    return scores;
}

std::vector<std::vector<SafetyMetricSample>> score_runs(
    std::span<const SimulationRun> runs, const ScoreOptions& options, int n_threads) {
    std::vector<std::vector<SafetyMetricSample>> scores(runs.size());
#ifdef _OPENMP
    const std::int64_t n = static_cast<std::int64_t>(runs.size());
#pragma omp parallel for schedule(dynamic) num_threads(n_threads > 0 ? n_threads : omp_get_max_threads())
    for (std::int64_t i = 0; i < n; ++i) {
        scores[static_cast<std::size_t>(i)] = score_run(runs[static_cast<std::size_t>(i)], options);
    }
#else
    (void)n_threads;
    scores = score_runs_serial(runs, options);
#endif
    return scores;
}

std::string metrics_csv(const std::string& run_id,
                        std::span<const SafetyMetricSample> samples) {
    std::ostringstream out;
    out << "run_id,t,obstacle_id,ttc,mdc,risk\n";
    char buf[64];
    for (const SafetyMetricSample& m : samples) {
        out << run_id << ',' << m.t << ',' << m.obstacle_id << ',';
        if (std::isinf(m.ttc)) {
            out << "inf";
        } else {
            std::snprintf(buf, sizeof(buf), "%.4f", m.ttc);
            out << buf;
        }
        std::snprintf(buf, sizeof(buf), ",%.4f,", m.mdc);
        out << buf << m.risk << '\n';
    }
    return out.str();
}

}  // namespace scenario_critic

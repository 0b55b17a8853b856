#include "scenario_critic/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scenario_critic {

namespace {

std::size_t segment_index(const std::vector<double>& arclength, double s) {
    // Index k with arclength[k] <= s <= arclength[k+1].
    const auto it = std::upper_bound(arclength.begin(), arclength.end(), s);
    std::size_t k = static_cast<std::size_t>(std::distance(arclength.begin(), it));
    if (k > 0) --k;
    return std::min(k, arclength.size() - 2);
}

}  // namespace

Vec2 ReferencePath::position_at(double s) const {
    const std::size_t k = segment_index(arclength, s);
    const double len = arclength[k + 1] - arclength[k];
    const double u = len > 0.0 ? (s - arclength[k]) / len : 0.0;
    return points[k] + (points[k + 1] - points[k]) * u;
}

Vec2 ReferencePath::tangent_at(double s) const {
    const std::size_t k = segment_index(arclength, s);
    const double len = arclength[k + 1] - arclength[k];
    const double u = len > 0.0 ? std::clamp((s - arclength[k]) / len, 0.0, 1.0) : 0.0;
    const Vec2 t = tangents[k] * (1.0 - u) + tangents[k + 1] * u;
    return t.normalized();
}

double ReferencePath::curvature_at(double s) const {
    const std::size_t k = segment_index(arclength, s);
    const double len = arclength[k + 1] - arclength[k];
    const double u = len > 0.0 ? std::clamp((s - arclength[k]) / len, 0.0, 1.0) : 0.0;
    return curvature[k] * (1.0 - u) + curvature[k + 1] * u;
}

ReferencePath make_reference_path(std::span<const Vec2> polyline, double max_spacing) {
    std::vector<Vec2> pts;
    pts.reserve(polyline.size());
    for (const Vec2& p : polyline) {
        if (pts.empty() || (p - pts.back()).norm() > 1e-12) pts.push_back(p);
    }
    if (pts.size() < 2) {
        throw std::invalid_argument("reference path needs >= 2 distinct points");
    }

    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += (pts[i] - pts[i - 1]).norm();
    const int n_segments = std::max(1, static_cast<int>(std::ceil(total / max_spacing)));
    const double ds = total / n_segments;

    ReferencePath path;
    path.points.reserve(static_cast<std::size_t>(n_segments) + 1);
    path.arclength.reserve(static_cast<std::size_t>(n_segments) + 1);

    // Walk the polyline emitting evenly spaced samples.
    std::size_t seg = 0;
    double seg_start_s = 0.0;
    double seg_len = (pts[1] - pts[0]).norm();
    for (int i = 0; i <= n_segments; ++i) {
        const double target = std::min(ds * i, total);
        while (seg + 2 < pts.size() && target > seg_start_s + seg_len) {
            seg_start_s += seg_len;
            ++seg;
            seg_len = (pts[seg + 1] - pts[seg]).norm();
        }
        const double u = seg_len > 0.0 ? (target - seg_start_s) / seg_len : 0.0;
        path.points.push_back(pts[seg] + (pts[seg + 1] - pts[seg]) * std::clamp(u, 0.0, 1.0));
        path.arclength.push_back(target);
    }

    const std::size_t n = path.points.size();
    path.tangents.resize(n);
    path.curvature.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = i == 0 ? 0 : i - 1;
        const std::size_t b = i + 1 == n ? i : i + 1;
        path.tangents[i] = (path.points[b] - path.points[a]).normalized();
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = i == 0 ? 0 : i - 1;
        const std::size_t b = i + 1 == n ? i : i + 1;
        const double dtheta = normalize_angle(
            std::atan2(path.tangents[b].y, path.tangents[b].x) -
            std::atan2(path.tangents[a].y, path.tangents[a].x));
        const double span = path.arclength[b] - path.arclength[a];
        path.curvature[i] = span > 0.0 ? dtheta / span : 0.0;
    }
    return path;
}

namespace {

std::vector<Vec2> concatenate_chain(std::span<const Lanelet* const> chain) {
    if (chain.empty()) throw std::invalid_argument("empty lanelet chain");
    std::vector<Vec2> polyline;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Lanelet* l = chain[i];
        if (l->centerline.size() < 2) {
            throw std::invalid_argument("lanelet " + std::to_string(l->id) +
                                        " has a degenerate centerline");
        }
        double len = 0.0;
        for (std::size_t j = 1; j < l->centerline.size(); ++j) {
            len += (l->centerline[j] - l->centerline[j - 1]).norm();
        }
        if (len <= 0.0) {
            throw std::invalid_argument("lanelet " + std::to_string(l->id) +
                                        " has a zero-length centerline");
        }
        if (i > 0) {
            const auto& succ = chain[i - 1]->successor_ids;
            if (std::find(succ.begin(), succ.end(), l->id) == succ.end()) {
                throw std::invalid_argument(
                    "lanelet chain disconnected between " + std::to_string(chain[i - 1]->id) +
                    " and " + std::to_string(l->id));
            }
        }
        polyline.insert(polyline.end(), l->centerline.begin(), l->centerline.end());
    }
    return polyline;
}

}  // namespace

ReferencePath build_reference_path(std::span<const Lanelet* const> chain) {
    return make_reference_path(concatenate_chain(chain));
}

ReferencePath build_reference_path(std::span<const Lanelet> chain) {
    std::vector<const Lanelet*> ptrs;
    ptrs.reserve(chain.size());
    for (const Lanelet& l : chain) ptrs.push_back(&l);
    return build_reference_path(ptrs);
}

FrenetPose project_to_frenet(const ReferencePath& path, const Vec2& point) {
    if (path.points.size() < 2) throw std::out_of_range("empty reference path");

    std::size_t nearest = 0;
    double nearest_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const double d2 = (point - path.points[i]).squared_norm();
        if (d2 < nearest_d2) {
            nearest_d2 = d2;
            nearest = i;
        }
    }
    if (nearest_d2 > kProjectionRange * kProjectionRange) {
        throw std::out_of_range("point further than projection range from path");
    }

    // g(s) = (p - pos(s)) . tan(s) decreases through zero at the foot point.
    const auto g = [&](double s) {
        return (point - path.position_at(s)).dot(path.tangent_at(s));
    };

    const double total = path.total_length();
    const std::size_t lo_i = nearest >= 2 ? nearest - 2 : 0;
    const std::size_t hi_i = std::min(nearest + 2, path.points.size() - 1);
    double lo = path.arclength[lo_i];
    double hi = path.arclength[hi_i];

    double step = std::max(hi - lo, 1.0);
    while (g(lo) < 0.0 && lo > 0.0) {
        lo = std::max(0.0, lo - step);
        step *= 2.0;
    }
    step = std::max(hi - lo, 1.0);
    while (g(hi) > 0.0 && hi < total) {
        hi = std::min(total, hi + step);
        step *= 2.0;
    }

    FrenetPose pose;
    if (lo <= 0.0 && g(0.0) <= 0.0) {
        pose.s = 0.0;
        pose.clamped = g(0.0) < -1e-9;
    } else if (hi >= total && g(total) >= 0.0) {
        pose.s = total;
        pose.clamped = g(total) > 1e-9;
    } else {
        for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (g(mid) > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        pose.s = 0.5 * (lo + hi);
    }
    pose.d = (point - path.position_at(pose.s)).dot(path.normal_at(pose.s));
    return pose;
}

Vec2 frenet_to_cartesian(const ReferencePath& path, const FrenetPose& pose) {
    if (pose.s < 0.0 || pose.s > path.total_length()) {
        throw std::out_of_range("s outside [0, path length]");
    }
    const double kappa = std::abs(path.curvature_at(pose.s));
    if (kappa > 1e-9 && std::abs(pose.d) >= 1.0 / kappa) {
        throw std::domain_error("|d| reaches the local curvature radius");
    }
    return path.position_at(pose.s) + path.normal_at(pose.s) * pose.d;
}

FrenetPose project_state(const ReferencePath& path, const StateSample& state) {
    FrenetPose pose = project_to_frenet(path, state.position);
    const Vec2 v = state.velocity_vector();
    pose.s_dot = v.dot(path.tangent_at(pose.s));
    pose.d_dot = v.dot(path.normal_at(pose.s));
    return pose;
}

FrenetPose relative_frenet(const ReferencePath& path, const StateSample& ego,
                           const StateSample& obstacle) {
    const FrenetPose e = project_state(path, ego);
    const FrenetPose o = project_state(path, obstacle);
    FrenetPose rel;
    rel.s = o.s - e.s;
    rel.d = o.d - e.d;
    rel.s_dot = o.s_dot - e.s_dot;
    rel.d_dot = o.d_dot - e.d_dot;
    rel.clamped = e.clamped || o.clamped;
    return rel;
}

ReferencePath ego_reference_path(const SimulationRun& run) {
    const Scenario& s = *run.scenario;
    if (!s.ego.states.empty()) {
        int lanelet_id = -1;
        const int t0 = s.ego.states.front().t;
        if (const auto it = s.ego.lanelet_id_at.find(t0); it != s.ego.lanelet_id_at.end()) {
            lanelet_id = it->second;
        } else {
            lanelet_id = lanelet_id_for(s, s.ego.states.front().position);
        }
        if (lanelet_id >= 0) {
            const auto chain = lanelet_chain_through(s, lanelet_id);
            if (!chain.empty()) return build_reference_path(chain);
        }
    }

    // Off-map fallback: the ego's own driven polyline.
    std::vector<Vec2> driven;
    for (const StateSample& st : s.ego.states) driven.push_back(st.position);
    std::vector<Vec2> distinct;
    for (const Vec2& p : driven) {
        if (distinct.empty() || (p - distinct.back()).norm() > 1e-9) distinct.push_back(p);
    }
    if (distinct.size() >= 2) return make_reference_path(distinct);

    // Stationary ego: a straight ray along its heading.
    const StateSample& st = s.ego.states.empty() ? s.planning_problem.initial_state
                                                 : s.ego.states.front();
    const Vec2 dir{std::cos(st.orientation), std::sin(st.orientation)};
    const std::vector<Vec2> ray{st.position - dir * 50.0, st.position + dir * 100.0};
    return make_reference_path(ray);
}

}  // namespace scenario_critic

#pragma once

#include <span>
#include <vector>

#include "scenario_critic/scenario.hpp"

namespace scenario_critic {

/// Arc-length parametrized reference curve. Positions are piecewise linear;
/// tangents (and the derived normals) are interpolated between vertices so
/// projection and lifting stay consistent near joints.
struct ReferencePath {
    std::vector<Vec2> points;
    std::vector<double> arclength;   // cumulative, arclength[0] == 0
    std::vector<Vec2> tangents;      // unit, one per point
    std::vector<double> curvature;   // signed, one per point

    double total_length() const { return arclength.empty() ? 0.0 : arclength.back(); }

    Vec2 position_at(double s) const;
    Vec2 tangent_at(double s) const;
    Vec2 normal_at(double s) const { return tangent_at(s).left_normal(); }
    double curvature_at(double s) const;
};

/// Path-relative pose: s longitudinal arclength from the path start, d signed
/// lateral offset (positive left of the tangent). `clamped` marks projections
/// that fell beyond a path end and were clamped to it.
struct FrenetPose {
    double s{0.0};
    double d{0.0};
    double s_dot{0.0};
    double d_dot{0.0};
    bool clamped{false};
};

inline constexpr double kPathSpacing = 0.5;          // resampling step, meters
inline constexpr double kProjectionRange = 200.0;    // projection guard, meters

/// Resamples a polyline to uniform spacing (<= kPathSpacing) and derives
/// tangents and curvature. Throws std::invalid_argument on degenerate input.
ReferencePath make_reference_path(std::span<const Vec2> polyline,
                                  double max_spacing = kPathSpacing);

/// Concatenates the centerlines of a successor-connected lanelet chain.
/// Throws std::invalid_argument when the chain is disconnected or contains a
/// zero-length segment.
ReferencePath build_reference_path(std::span<const Lanelet* const> chain);
ReferencePath build_reference_path(std::span<const Lanelet> chain);

/// Projects a point onto the path. Throws std::out_of_range when the point is
/// further than kProjectionRange from every path vertex.
FrenetPose project_to_frenet(const ReferencePath& path, const Vec2& point);

/// Lifts a Frenet pose back to Cartesian coordinates. Throws
/// std::out_of_range for s outside [0, length] and std::domain_error when
/// |d| reaches the local curvature radius (ambiguous lift).
Vec2 frenet_to_cartesian(const ReferencePath& path, const FrenetPose& pose);

/// Frenet pose of a moving body: projection of its position plus the
/// decomposition of its velocity into path-tangential and normal rates.
FrenetPose project_state(const ReferencePath& path, const StateSample& state);

/// Obstacle pose relative to the ego in the ego's path frame
/// (delta_s = s_obs - s_ego and analogously for d and the rates).
FrenetPose relative_frenet(const ReferencePath& path, const StateSample& ego,
                           const StateSample& obstacle);

/// Reference path for a run: the ego's occupied lanelet chain when the map
/// covers the ego position, otherwise the ego's own driven polyline.
ReferencePath ego_reference_path(const SimulationRun& run);

}  // namespace scenario_critic

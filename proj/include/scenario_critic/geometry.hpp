#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace scenario_critic {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double k) const { return {x * k, y * k}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }

    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{1.0, 0.0};
    }
    /// Left-hand normal (counterclockwise quarter turn).
    Vec2 left_normal() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

inline Vec2 operator*(double k, const Vec2& v) { return v * k; }

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

/// Rectangle with center, half extents and heading. The long axis points
/// along the heading.
struct OrientedBox {
    Vec2 center;
    double half_length{0.0};
    double half_width{0.0};
    double heading{0.0};

    Vec2 long_axis() const { return {std::cos(heading), std::sin(heading)}; }
    Vec2 lat_axis() const { return long_axis().left_normal(); }

    /// Corners in counterclockwise order starting front-left.
    std::array<Vec2, 4> corners() const;

    /// Closed-set membership test.
    bool contains(const Vec2& p) const;
};

/// Separating-axis overlap test over the four box axes. Touching boxes
/// count as intersecting (closed sets).
bool oriented_boxes_intersect(const OrientedBox& a, const OrientedBox& b);

/// Minimum Euclidean distance between box boundaries; 0 when intersecting.
double min_box_distance(const OrientedBox& a, const OrientedBox& b);

/// Center distance at which the two boxes (keeping their headings) first
/// touch when approached along `direction`. This is the radial extent of the
/// Minkowski sum of the two footprints along that direction.
double contact_distance_along(const OrientedBox& a, const OrientedBox& b,
                              const Vec2& direction);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);
double segment_segment_distance(const Vec2& p1, const Vec2& p2,
                                const Vec2& q1, const Vec2& q2);

/// Ray-cast membership test for a simple polygon.
bool point_in_polygon(const Vec2& p, std::span<const Vec2> polygon);

/// Distance from a point to a polygon; 0 when the point lies inside.
double point_polygon_distance(const Vec2& p, std::span<const Vec2> polygon);

}  // namespace scenario_critic

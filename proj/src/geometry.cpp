#include "scenario_critic/geometry.hpp"

#include <algorithm>
#include <limits>

namespace scenario_critic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double normalize_angle(double angle) {
    double a = std::fmod(angle, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

std::array<Vec2, 4> OrientedBox::corners() const {
    const Vec2 ax = long_axis() * half_length;
    const Vec2 ay = lat_axis() * half_width;
    return {center + ax + ay, center - ax + ay, center - ax - ay, center + ax - ay};
}

bool OrientedBox::contains(const Vec2& p) const {
    const Vec2 r = p - center;
    return std::abs(r.dot(long_axis())) <= half_length &&
           std::abs(r.dot(lat_axis())) <= half_width;
}

namespace {

// Projection radius of a box onto a unit axis.
double projection_radius(const OrientedBox& b, const Vec2& axis) {
    return b.half_length * std::abs(axis.dot(b.long_axis())) +
           b.half_width * std::abs(axis.dot(b.lat_axis()));
}

std::array<Vec2, 4> sat_axes(const OrientedBox& a, const OrientedBox& b) {
    return {a.long_axis(), a.lat_axis(), b.long_axis(), b.lat_axis()};
}

}  // namespace

bool oriented_boxes_intersect(const OrientedBox& a, const OrientedBox& b) {
    const Vec2 d = b.center - a.center;
    for (const Vec2& axis : sat_axes(a, b)) {
        const double gap = std::abs(d.dot(axis)) -
                           (projection_radius(a, axis) + projection_radius(b, axis));
        if (gap > 0.0) return false;
    }
    return true;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squared_norm();
    if (len2 <= 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

double segment_segment_distance(const Vec2& p1, const Vec2& p2,
                                const Vec2& q1, const Vec2& q2) {
    const Vec2 dp = p2 - p1, dq = q2 - q1, r = p1 - q1;
    const double a = dp.squared_norm();
    const double e = dq.squared_norm();
    const double f = dq.dot(r);

    double s = 0.0, t = 0.0;
    if (a <= 0.0 && e <= 0.0) {
        return r.norm();
    }
    if (a <= 0.0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dp.dot(r);
        if (e <= 0.0) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dp.dot(dq);
            const double denom = a * e - b * b;
            if (denom > 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return ((p1 + dp * s) - (q1 + dq * t)).norm();
}

double min_box_distance(const OrientedBox& a, const OrientedBox& b) {
    if (oriented_boxes_intersect(a, b)) return 0.0;
    const auto ca = a.corners();
    const auto cb = b.corners();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            best = std::min(best, segment_segment_distance(ca[i], ca[(i + 1) % 4],
                                                           cb[j], cb[(j + 1) % 4]));
        }
    }
    return best;
}

double contact_distance_along(const OrientedBox& a, const OrientedBox& b,
                              const Vec2& direction) {
    // Boxes with centers D*u apart intersect iff for every SAT axis
    // |D*u.axis| <= ra + rb; the contact distance is the tightest bound.
    const Vec2 u = direction.normalized();
    double contact = std::numeric_limits<double>::infinity();
    for (const Vec2& axis : sat_axes(a, b)) {
        const double along = std::abs(u.dot(axis));
        if (along < 1e-12) continue;
        const double r = projection_radius(a, axis) + projection_radius(b, axis);
        contact = std::min(contact, r / along);
    }
    return contact;
}

bool point_in_polygon(const Vec2& p, std::span<const Vec2> polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& pi = polygon[i];
        const Vec2& pj = polygon[j];
        const bool crosses = (pi.y > p.y) != (pj.y > p.y);
        if (crosses) {
            const double x_at = pi.x + (p.y - pi.y) * (pj.x - pi.x) / (pj.y - pi.y);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside;
}

double point_polygon_distance(const Vec2& p, std::span<const Vec2> polygon) {
    if (polygon.size() < 2) return std::numeric_limits<double>::infinity();
    if (point_in_polygon(p, polygon)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
        best = std::min(best, point_segment_distance(p, polygon[j], polygon[i]));
    }
    return best;
}

}  // namespace scenario_critic

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oracle {

namespace {

// Local geometry helpers, deliberately not reusing the library kernels.

std::vector<Vec2> box_corners(const OrientedBox& b) {
    const double c = std::cos(b.heading), s = std::sin(b.heading);
    const Vec2 ax{c * b.half_length, s * b.half_length};
    const Vec2 ay{-s * b.half_width, c * b.half_width};
    return {{b.center.x + ax.x + ay.x, b.center.y + ax.y + ay.y},
            {b.center.x - ax.x + ay.x, b.center.y - ax.y + ay.y},
            {b.center.x - ax.x - ay.x, b.center.y - ax.y - ay.y},
            {b.center.x + ax.x - ay.x, b.center.y + ax.y - ay.y}};
}

bool box_contains(const OrientedBox& b, const Vec2& p) {
    const double c = std::cos(b.heading), s = std::sin(b.heading);
    const double rx = p.x - b.center.x, ry = p.y - b.center.y;
    const double lx = c * rx + s * ry;
    const double ly = -s * rx + c * ry;
    return std::abs(lx) <= b.half_length && std::abs(ly) <= b.half_width;
}

std::vector<Vec2> boundary_samples(const OrientedBox& b, double step) {
    const auto corners = box_corners(b);
    std::vector<Vec2> samples;
    for (int e = 0; e < 4; ++e) {
        const Vec2& p = corners[static_cast<std::size_t>(e)];
        const Vec2& q = corners[static_cast<std::size_t>((e + 1) % 4)];
        const double len = std::hypot(q.x - p.x, q.y - p.y);
        const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int i = 0; i < n; ++i) {
            const double u = static_cast<double>(i) / n;
            samples.push_back({p.x + (q.x - p.x) * u, p.y + (q.y - p.y) * u});
        }
    }
    return samples;
}

double point_to_edge(const Vec2& p, const Vec2& a, const Vec2& b) {
    const double abx = b.x - a.x, aby = b.y - a.y;
    const double len2 = abx * abx + aby * aby;
    double t = len2 > 0.0 ? ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + abx * t), p.y - (a.y + aby * t));
}

bool sat_intersect(const OrientedBox& a, const OrientedBox& b) {
    const double ca = std::cos(a.heading), sa = std::sin(a.heading);
    const double cb = std::cos(b.heading), sb = std::sin(b.heading);
    const Vec2 axes[4] = {{ca, sa}, {-sa, ca}, {cb, sb}, {-sb, cb}};
    const double dx = b.center.x - a.center.x, dy = b.center.y - a.center.y;
    for (const Vec2& axis : axes) {
        const double ra = a.half_length * std::abs(axis.x * ca + axis.y * sa) +
                          a.half_width * std::abs(-axis.x * sa + axis.y * ca);
        const double rb = b.half_length * std::abs(axis.x * cb + axis.y * sb) +
                          b.half_width * std::abs(-axis.x * sb + axis.y * cb);
        if (std::abs(dx * axis.x + dy * axis.y) > ra + rb) return false;
    }
    return true;
}

double point_to_box_boundary(const Vec2& p, const OrientedBox& b) {
    const auto corners = box_corners(b);
    double best = std::numeric_limits<double>::infinity();
    for (int e = 0; e < 4; ++e) {
        best = std::min(best, point_to_edge(p, corners[static_cast<std::size_t>(e)],
                                            corners[static_cast<std::size_t>((e + 1) % 4)]));
    }
    return best;
}

}  // namespace

bool boxes_intersect_sampled(const OrientedBox& a, const OrientedBox& b, double step) {
    if (box_contains(b, a.center) || box_contains(a, b.center)) return true;
    for (const Vec2& p : boundary_samples(a, step)) {
        if (box_contains(b, p)) return true;
    }
    for (const Vec2& p : boundary_samples(b, step)) {
        if (box_contains(a, p)) return true;
    }
    return false;
}

double box_distance_sampled(const OrientedBox& a, const OrientedBox& b, double step) {
    if (boxes_intersect_sampled(a, b, step)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& p : boundary_samples(a, step)) {
        best = std::min(best, point_to_box_boundary(p, b));
    }
    for (const Vec2& p : boundary_samples(b, step)) {
        best = std::min(best, point_to_box_boundary(p, a));
    }
    return best;
}

double penetration_depth(const OrientedBox& a, const OrientedBox& b) {
    const double ca = std::cos(a.heading), sa = std::sin(a.heading);
    const double cb = std::cos(b.heading), sb = std::sin(b.heading);
    const Vec2 axes[4] = {{ca, sa}, {-sa, ca}, {cb, sb}, {-sb, cb}};
    const double dx = b.center.x - a.center.x, dy = b.center.y - a.center.y;
    double depth = std::numeric_limits<double>::infinity();
    for (const Vec2& axis : axes) {
        const double ra = a.half_length * std::abs(axis.x * ca + axis.y * sa) +
                          a.half_width * std::abs(-axis.x * sa + axis.y * ca);
        const double rb = b.half_length * std::abs(axis.x * cb + axis.y * sb) +
                          b.half_width * std::abs(-axis.x * sb + axis.y * cb);
        const double overlap = ra + rb - std::abs(dx * axis.x + dy * axis.y);
        if (overlap < 0.0) return 0.0;
        depth = std::min(depth, overlap);
    }
    return depth;
}

PolylineProjection project_sampled(const std::vector<Vec2>& polyline,
                                   const Vec2& point, double step) {
    double best_d2 = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    Vec2 best_dir{1.0, 0.0};
    Vec2 best_foot = polyline.front();

    double s0 = 0.0;
    for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
        const Vec2& a = polyline[i];
        const Vec2& b = polyline[i + 1];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len <= 0.0) continue;
        const Vec2 dir{(b.x - a.x) / len, (b.y - a.y) / len};
        const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int k = 0; k <= n; ++k) {
            const double u = len * k / n;
            const Vec2 foot{a.x + dir.x * u, a.y + dir.y * u};
            const double d2 = (point.x - foot.x) * (point.x - foot.x) +
                              (point.y - foot.y) * (point.y - foot.y);
            if (d2 < best_d2) {
                best_d2 = d2;
                best_s = s0 + u;
                best_dir = dir;
                best_foot = foot;
            }
        }
        s0 += len;
    }

    const double cross = best_dir.x * (point.y - best_foot.y) -
                         best_dir.y * (point.x - best_foot.x);
    PolylineProjection proj;
    proj.s = best_s;
    proj.d = std::copysign(std::sqrt(best_d2), cross);
    return proj;
}

std::optional<double> first_contact_sim(const OrientedBox& ego, const Vec2& ego_vel,
                                        const OrientedBox& obs, const Vec2& obs_vel,
                                        double dt, double max_time) {
    OrientedBox a = ego, b = obs;
    const int steps = static_cast<int>(std::ceil(max_time / dt));
    for (int i = 0; i <= steps; ++i) {
        const double t = i * dt;
        a.center = {ego.center.x + ego_vel.x * t, ego.center.y + ego_vel.y * t};
        b.center = {obs.center.x + obs_vel.x * t, obs.center.y + obs_vel.y * t};
        if (sat_intersect(a, b)) return t;
    }
    return std::nullopt;
}

}  // namespace oracle

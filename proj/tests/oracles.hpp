#pragma once

// Independent reference implementations the production code is checked against.
// Everything here favors obviousness over speed: point-membership marching instead
// of closed-form intersections, fine-step Euler instead of exact arcs, and a dumb
// per-pixel scan instead of the production segmentation loop.

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "patrolsim/perception.hpp"
#include "patrolsim/sim.hpp"
#include "patrolsim/world.hpp"

namespace oracles {

using patrolsim::BodyGeometry;
using patrolsim::CameraFrame;
using patrolsim::CameraParams;
using patrolsim::CircleBody;
using patrolsim::DepthFrame;
using patrolsim::Obstacle;
using patrolsim::ObstacleKind;
using patrolsim::Pose;
using patrolsim::SegmentationResult;
using patrolsim::Vec2;
using patrolsim::WheelCommand;

// ---------------------------------------------------------------------------
// ray marching

struct MembershipWorld {
    std::vector<Obstacle> solids;
    std::vector<CircleBody> circles;

    bool inside(Vec2 p) const {
        for (const Obstacle& ob : solids) {
            if (ob.kind == ObstacleKind::Box) {
                if (std::abs(p.x - ob.center.x) <= ob.half_extents.x &&
                    std::abs(p.y - ob.center.y) <= ob.half_extents.y)
                    return true;
            } else if ((p - ob.center).norm() <= ob.radius) {
                return true;
            }
        }
        for (const CircleBody& c : circles)
            if ((p - c.center).norm() <= c.radius) return true;
        return false;
    }
};

// step along the ray until a sample lands inside a solid, then bisect the
// boundary; the fixed 1e-4 m step cannot skip any shipped geometry (thinnest
// solids are the 0.05 m wall slabs)
inline std::optional<double> march_ray(const MembershipWorld& w, Vec2 origin, Vec2 dir,
                                       double max_range, double step = 1e-4) {
    double lo = 0.0;
    for (double t = step; t <= max_range; t += step) {
        if (w.inside(origin + dir * t)) {
            double hi = t;
            for (int i = 0; i < 80; ++i) {
                double mid = (lo + hi) / 2.0;
                if (w.inside(origin + dir * mid))
                    hi = mid;
                else
                    lo = mid;
            }
            return (lo + hi) / 2.0;
        }
        lo = t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// integration

inline Pose euler_integrate(Pose pose, const WheelCommand& cmd, const BodyGeometry& geom,
                            double dt, int substeps = 1000) {
    const double v = geom.wheel_radius * (cmd.left + cmd.right) / 2.0;
    const double w = geom.wheel_radius * (cmd.right - cmd.left) / geom.axle_track;
    const double h = dt / substeps;
    for (int i = 0; i < substeps; ++i) {
        pose.p.x += v * std::cos(pose.heading) * h;
        pose.p.y += v * std::sin(pose.heading) * h;
        pose.heading += w * h;
    }
    pose.heading = patrolsim::norm_angle(pose.heading);
    return pose;
}

// ---------------------------------------------------------------------------
// segmentation

inline SegmentationResult segment_naive(const CameraFrame& frame, const DepthFrame& depth) {
    SegmentationResult out;
    out.blue.min_range = depth.max_depth;
    out.green.min_range = depth.max_depth;
    for (int row = 0; row < frame.height; ++row) {
        for (int col = 0; col < frame.width; ++col) {
            auto [r, g, b] = frame.at(row, col);
            bool is_blue = b > 130 && r < 134 && g < 134;
            bool is_green = b < 116 && r < 116 && g > 161;
            if (!is_blue && !is_green) continue;
            auto& ch = is_blue ? out.blue : out.green;
            if (col < frame.width / 2)
                ++ch.left;
            else
                ++ch.right;
            if (depth.at(row, col) < ch.min_range) ch.min_range = depth.at(row, col);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// angular-extent pixel count for a lone cylinder straight ahead of the camera

inline long headon_pixels(double d, double radius, double half_height,
                          const CameraParams& cam) {
    const double alpha = std::asin(radius / d);
    const double col_step = cam.col_step();
    const double row_step = cam.row_step();
    long total = 0;
    for (int c = 0; c < cam.width; ++c) {
        const double th = cam.hfov / 2.0 - (c + 0.5) * col_step;
        if (std::abs(th) > alpha) continue;
        const double s = d * std::sin(th);
        const double hit = d * std::cos(th) - std::sqrt(radius * radius - s * s);
        const double q = std::atan(half_height / hit) / row_step;
        total += 2 * std::min<long>(cam.height / 2, static_cast<long>(q + 0.5));
    }
    return total;
}

// ---------------------------------------------------------------------------
// randomized-world helpers (fixed seeds keep every run identical)

struct RandomWorld {
    MembershipWorld membership;
    std::vector<Obstacle> obstacles;  // same solids, production form
};

inline RandomWorld random_world(std::mt19937& rng) {
    std::uniform_real_distribution<double> pos(-5.0, 5.0);
    std::uniform_real_distribution<double> box_h(0.2, 1.5);
    std::uniform_real_distribution<double> rad(0.3, 1.2);
    std::uniform_int_distribution<int> nbox(2, 4), ncirc(1, 3);
    RandomWorld w;
    int nb = nbox(rng), nc = ncirc(rng);
    for (int i = 0; i < nb; ++i) {
        Obstacle ob;
        ob.kind = ObstacleKind::Box;
        ob.center = {pos(rng), pos(rng)};
        ob.half_extents = {box_h(rng), box_h(rng)};
        w.obstacles.push_back(ob);
    }
    for (int i = 0; i < nc; ++i) {
        Obstacle ob;
        ob.kind = ObstacleKind::Circle;
        ob.center = {pos(rng), pos(rng)};
        ob.radius = rad(rng);
        w.obstacles.push_back(ob);
    }
    w.membership.solids = w.obstacles;
    return w;
}

// a point strictly inside one of the world's solids, for aiming rays so they can
// neither miss nor graze
inline Vec2 interior_point(const RandomWorld& w, std::mt19937& rng) {
    std::uniform_int_distribution<size_t> pick(0, w.obstacles.size() - 1);
    std::uniform_real_distribution<double> frac(-0.6, 0.6);
    const Obstacle& ob = w.obstacles[pick(rng)];
    if (ob.kind == ObstacleKind::Box)
        return {ob.center.x + frac(rng) * ob.half_extents.x,
                ob.center.y + frac(rng) * ob.half_extents.y};
    double a = frac(rng) * patrolsim::kPi, r = std::abs(frac(rng)) * ob.radius;
    return ob.center + patrolsim::unit_from_angle(a) * r;
}

}  // namespace oracles

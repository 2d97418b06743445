#include "patrolsim/perception.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace patrolsim {

PixelClass classify_pixel(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    if (b > 130 && r < 134 && g < 134) return PixelClass::Blue;
    if (b < 116 && r < 116 && g > 161) return PixelClass::Green;
    return PixelClass::None;
}

SegmentationResult segment(const CameraFrame& frame, const DepthFrame& depth) {
    SegmentationResult out;
    out.blue.min_range = depth.max_depth;
    out.green.min_range = depth.max_depth;
    const int half = frame.width / 2;
    for (int row = 0; row < frame.height; ++row) {
        for (int col = 0; col < frame.width; ++col) {
            Rgb px = frame.at(row, col);
            PixelClass c = classify_pixel(px[0], px[1], px[2]);
            if (c == PixelClass::None) continue;
            auto& ch = c == PixelClass::Blue ? out.blue : out.green;
            if (col < half)
                ++ch.left;
            else
                ++ch.right;
            ch.min_range = std::min(ch.min_range, depth.at(row, col));
        }
    }
    return out;
}

RenderOutput render(const WorldGeometry& world, const Pose& pose, const CameraParams& cam,
                    std::span<const VisualBody> bodies, int skip_body,
                    double obstacle_half_height) {
    RenderOutput out;
    out.frame.width = cam.width;
    out.frame.height = cam.height;
    out.frame.px.assign(static_cast<size_t>(cam.width) * cam.height, kBackgroundColor);
    out.depth.width = cam.width;
    out.depth.height = cam.height;
    out.depth.max_depth = cam.max_depth;
    out.depth.d.assign(static_cast<size_t>(cam.width) * cam.height, cam.max_depth);

    const double axis = pose.heading + cam.mount_offset;
    const double col_step = cam.col_step();
    const double row_step = cam.row_step();
    const double row_mid = cam.height / 2.0 - 0.5;  // row index whose center sits on the horizon

    for (int col = 0; col < cam.width; ++col) {
        const double ang = axis + cam.hfov / 2.0 - (col + 0.5) * col_step;
        const Vec2 dir = unit_from_angle(ang);

        double best_t = 0.0;
        bool have = false;
        Rgb color = kObstacleColor;
        double half_height = obstacle_half_height;

        if (auto hit = world.ray_cast(pose.p, dir, std::numeric_limits<double>::max())) {
            best_t = hit->distance;
            have = true;
        }
        for (size_t i = 0; i < bodies.size(); ++i) {
            if (static_cast<int>(i) == skip_body) continue;
            auto hit = ray_circle_hit(pose.p, dir, bodies[i].center, bodies[i].radius);
            if (hit && (!have || *hit < best_t)) {
                best_t = *hit;
                have = true;
                color = bodies[i].color;
                half_height = bodies[i].half_height;
            }
        }
        if (!have) continue;

        const double q = std::atan(half_height / best_t) / row_step;
        const int r0 = std::max(0, static_cast<int>(std::ceil(row_mid - q)));
        const int r1 = std::min(cam.height - 1, static_cast<int>(std::floor(row_mid + q)));
        const double d = std::min(best_t, cam.max_depth);
        for (int row = r0; row <= r1; ++row) {
            out.frame.px[static_cast<size_t>(row) * cam.width + col] = color;
            out.depth.d[static_cast<size_t>(row) * cam.width + col] = d;
        }
    }
    return out;
}

void write_ppm(const CameraFrame& frame, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "P6\n" << frame.width << " " << frame.height << "\n255\n";
    for (const Rgb& px : frame.px)
        f.write(reinterpret_cast<const char*>(px.data()), 3);
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace patrolsim

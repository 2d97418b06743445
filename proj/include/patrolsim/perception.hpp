#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "patrolsim/world.hpp"

namespace patrolsim {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kBackgroundColor = {255, 255, 255};
inline constexpr Rgb kObstacleColor = {100, 100, 100};
inline constexpr Rgb kRobotColor = {120, 120, 120};
inline constexpr Rgb kBlueColor = {0, 0, 255};
inline constexpr Rgb kGreenColor = {0, 255, 0};

struct CameraFrame {
    int width = 0;
    int height = 0;
    std::vector<Rgb> px;  // row-major

    Rgb at(int row, int col) const { return px[static_cast<size_t>(row) * width + col]; }
};

struct DepthFrame {
    int width = 0;
    int height = 0;
    double max_depth = 10.0;
    std::vector<double> d;  // row-major, (0, max_depth]; background holds max_depth

    double at(int row, int col) const { return d[static_cast<size_t>(row) * width + col]; }
};

enum class PixelClass { None, Blue, Green };

PixelClass classify_pixel(std::uint8_t r, std::uint8_t g, std::uint8_t b);

struct SegmentationResult {
    struct Channel {
        long left = 0;   // pixel count, columns [0, width/2)
        long right = 0;  // columns [width/2, width)
        double min_range = 0.0;
        long total() const { return left + right; }
    };
    Channel blue;
    Channel green;
};

SegmentationResult segment(const CameraFrame& frame, const DepthFrame& depth);

// a vertical cylinder centered on the camera's horizon
struct VisualBody {
    Vec2 center;
    double radius = 0.0;
    double half_height = 0.0;
    Rgb color = kRobotColor;
};

struct RenderOutput {
    CameraFrame frame;
    DepthFrame depth;
};

// single-hit column raycaster: per column the nearest surface paints its vertical
// angular extent, everything else stays background
RenderOutput render(const WorldGeometry& world, const Pose& pose, const CameraParams& cam,
                    std::span<const VisualBody> bodies = {}, int skip_body = -1,
                    double obstacle_half_height = 0.25);

void write_ppm(const CameraFrame& frame, const std::string& path);

}  // namespace patrolsim

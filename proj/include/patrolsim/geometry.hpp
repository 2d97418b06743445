#pragma once

#include <cmath>

namespace patrolsim {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 unit_from_angle(double a) { return {std::cos(a), std::sin(a)}; }

// normalize to (-pi, pi]
inline double norm_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

struct Pose {
    Vec2 p;
    double heading = 0.0;  // radians, (-pi, pi]
};

struct Rect {
    Vec2 min;
    Vec2 max;
};

}  // namespace patrolsim

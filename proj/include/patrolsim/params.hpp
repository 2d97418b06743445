#pragma once

#include <array>

#include "patrolsim/geometry.hpp"

namespace patrolsim {

// Differential-drive speed law. Wheel speeds are rad/s.
struct ControllerParams {
    double max_wheel_speed = 5.24;
    double base_fraction = 0.5;   // cruise speed as a fraction of max
    double steer_delta = 0.5;     // added/subtracted across the axle when steering
    double band = 0.015;          // dead band around the midpoint, meters
    double engage_gate = 3.2;     // midpoint below this engages centering, meters
    int clear_raw_gate = 700;     // any sonar raw at/above this forces avoidance
    int pixel_stop = 3000;        // target pixel count above this stops the chase
    int pixel_search = 10;        // target pixel count below this spins in place
    double range_max = 10.0;      // range finder ceiling, meters

    double base_speed() const { return base_fraction * max_wheel_speed; }
};

struct BodyGeometry {
    double body_radius = 0.22;
    double wheel_radius = 0.0975;
    double axle_track = 0.33;
};

struct SonarLayout {
    // index 0..3 left group, 4..7 right group
    std::array<double, 8> bearings = {
        90.0 * kPi / 180.0,  50.0 * kPi / 180.0,  30.0 * kPi / 180.0,  10.0 * kPi / 180.0,
        -10.0 * kPi / 180.0, -30.0 * kPi / 180.0, -50.0 * kPi / 180.0, -90.0 * kPi / 180.0};
    double max_range = 5.0;
    double incidence_cutoff = 45.0 * kPi / 180.0;  // no echo beyond this grazing angle
};

struct CameraParams {
    int width = 256;
    int height = 128;
    double hfov = 60.0 * kPi / 180.0;
    double max_depth = 10.0;
    double mount_offset = 0.0;  // camera heading relative to body heading

    // square angular pixels
    double col_step() const { return hfov / width; }
    double row_step() const { return hfov / width; }
};

// Visual sizes used by the renderer. Sonar and collisions use BodyGeometry.
struct VisualParams {
    double intruder_radius = 0.20;
    double intruder_height = 0.40;  // calibrated against the pixel-stop threshold
    double robot_height = 0.40;
    double obstacle_height = 0.50;
};

struct ScenarioParams {
    ControllerParams controller;
    BodyGeometry body;
    SonarLayout sonar;
    CameraParams camera;
    VisualParams visual;
};

}  // namespace patrolsim

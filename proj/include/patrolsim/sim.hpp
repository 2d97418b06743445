#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "patrolsim/pursuit.hpp"
#include "patrolsim/world.hpp"

namespace patrolsim {

inline constexpr std::int64_t kTickMs = 64;
inline constexpr double kDt = kTickMs / 1000.0;

struct RobotState {
    int id = 0;
    Pose pose;
    Mode mode = Mode::Nav;
    WheelCommand last_command;
};

struct IntruderState {
    IntruderColor color = IntruderColor::Blue;
    Pose pose;
};

struct SimState {
    std::int64_t tick = 0;
    std::vector<RobotState> robots;
    std::vector<IntruderState> intruders;

    double time_s() const { return static_cast<double>(tick * kTickMs) / 1000.0; }
};

// one row per robot per tick, sampled at the tick start; intruder pose rows use
// robot = "intruder:<color>" and mode "intruder"
struct TraceRecord {
    std::int64_t tick = 0;
    double time_s = 0.0;
    std::string robot;
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;
    std::string mode;
    double d_left = 0.0;
    double d_right = 0.0;
    double midpoint = 0.0;
    std::string chosen_color;
    long left_pixels = 0;
    long right_pixels = 0;
    double blue_min_range = 0.0;
    double green_min_range = 0.0;
    double cmd_left = 0.0;
    double cmd_right = 0.0;
    double clearance_m = 0.0;

    bool operator==(const TraceRecord&) const = default;
};

// closed-form unicycle arc for one command held over dt
Pose integrate(const Pose& pose, const WheelCommand& cmd, const BodyGeometry& geom, double dt);

// piecewise-linear waypoint schedule; clamps before the first and after the last
Pose intruder_step(const Intruder& intruder, double t);

using FrameHook =
    std::function<void(std::int64_t tick, int robot_id, const CameraFrame& frame)>;

SimState initial_state(const Scenario& scenario);

// sense -> decide for every robot against the tick-start snapshot, then move
void step(SimState& state, const Scenario& scenario, const WorldGeometry& world,
          std::vector<TraceRecord>* out, const FrameHook& frames = nullptr);

std::vector<TraceRecord> run(const Scenario& scenario, const FrameHook& frames = nullptr,
                             std::optional<double> duration_override = std::nullopt);

}  // namespace patrolsim

#pragma once

#include <span>

#include "patrolsim/params.hpp"
#include "patrolsim/sonar.hpp"

namespace patrolsim {

struct WheelCommand {
    double left = 0.0;
    double right = 0.0;
    bool operator==(const WheelCommand&) const = default;
};

// mean of the nonzero entries, 0 if all are zero
double side_mean(std::span<const int> raws);

inline double midpoint(double d_left, double d_right) { return (d_left + d_right) / 2.0; }

// true iff every raw is strictly below the gate
bool obstacle_clear(const SonarScan& s, int clear_raw_gate);

struct NavDecision {
    double mean_raw_left = 0.0;
    double mean_raw_right = 0.0;
    double d_left = 0.0;
    double d_right = 0.0;
    double midpoint = 0.0;
    bool engaged = false;  // midpoint below the engage gate
    WheelCommand command;
};

// keep the midpoint of the two side distances: veer toward the farther side when
// the midpoint leaves the dead band, otherwise cruise straight
NavDecision nav_command(const SonarScan& s, const ControllerParams& p,
                        double sonar_max_range = 5.0);

}  // namespace patrolsim

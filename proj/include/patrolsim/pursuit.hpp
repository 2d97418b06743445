#pragma once

#include "patrolsim/nav.hpp"
#include "patrolsim/perception.hpp"

namespace patrolsim {

enum class TargetColor { NoTarget, Blue, Green };

const char* to_string(TargetColor c);

enum class Mode { Nav, Follow, SearchSpin, Stopped };

const char* to_string(Mode m);

struct TargetChoice {
    TargetColor color = TargetColor::NoTarget;
    double chosen_range = 0.0;  // sensed min range of the chosen color
    long left_pixels = 0;
    long right_pixels = 0;
};

// the nearer color wins; ties go to blue; nothing sensed -> NoTarget
TargetChoice select_target(const SegmentationResult& seg, double range_max);

struct PursuitDecision {
    TargetChoice choice;
    long total_pixels = 0;
    Mode mode = Mode::Follow;
    WheelCommand command;
};

// balance the chosen color's pixels across the image halves; too few pixels spins
// in place hunting, too many means point blank and stops
PursuitDecision pursuit_command(const SegmentationResult& seg, const ControllerParams& p);

}  // namespace patrolsim

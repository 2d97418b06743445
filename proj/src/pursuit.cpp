#include "patrolsim/pursuit.hpp"

namespace patrolsim {

const char* to_string(TargetColor c) {
    switch (c) {
        case TargetColor::Blue: return "blue";
        case TargetColor::Green: return "green";
        default: return "none";
    }
}

const char* to_string(Mode m) {
    switch (m) {
        case Mode::Nav: return "nav";
        case Mode::Follow: return "follow";
        case Mode::SearchSpin: return "search";
        default: return "stop";
    }
}

TargetChoice select_target(const SegmentationResult& seg, double range_max) {
    TargetChoice c;
    const auto& b = seg.blue;
    const auto& g = seg.green;
    if (b.min_range < g.min_range) {
        c.color = TargetColor::Blue;
    } else if (b.min_range > g.min_range) {
        c.color = TargetColor::Green;
    } else if (b.min_range >= range_max) {
        c.color = TargetColor::NoTarget;  // nothing sensed on either channel
    } else {
        c.color = TargetColor::Blue;  // exact tie: deterministic pick
    }
    if (c.color == TargetColor::Blue) {
        c.chosen_range = b.min_range;
        c.left_pixels = b.left;
        c.right_pixels = b.right;
    } else if (c.color == TargetColor::Green) {
        c.chosen_range = g.min_range;
        c.left_pixels = g.left;
        c.right_pixels = g.right;
    } else {
        c.chosen_range = range_max;
    }
    return c;
}

PursuitDecision pursuit_command(const SegmentationResult& seg, const ControllerParams& p) {
    PursuitDecision d;
    d.choice = select_target(seg, p.range_max);
    d.total_pixels = d.choice.left_pixels + d.choice.right_pixels;

    const double base = p.base_speed();
    d.mode = Mode::Follow;
    d.command = {base, base};
    if (d.choice.right_pixels < d.choice.left_pixels)
        d.command = {base - p.steer_delta, base + p.steer_delta};  // heavier left: turn left
    else if (d.choice.right_pixels > d.choice.left_pixels)
        d.command = {base + p.steer_delta, base - p.steer_delta};
    if (d.total_pixels < p.pixel_search) {
        d.mode = Mode::SearchSpin;
        d.command = {0.0, base};
    }
    if (d.total_pixels > p.pixel_stop) {
        d.mode = Mode::Stopped;
        d.command = {0.0, 0.0};
    }
    return d;
}

}  // namespace patrolsim

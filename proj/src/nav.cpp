#include "patrolsim/nav.hpp"

namespace patrolsim {

double side_mean(std::span<const int> raws) {
    double sum = 0.0;
    int n = 0;
    for (int v : raws) {
        if (v > 0) {
            sum += v;
            ++n;
        }
    }
    return n == 0 ? 0.0 : sum / n;
}

bool obstacle_clear(const SonarScan& s, int clear_raw_gate) {
    for (int v : s.raws)
        if (v >= clear_raw_gate) return false;
    return true;
}

NavDecision nav_command(const SonarScan& s, const ControllerParams& p, double sonar_max_range) {
    NavDecision d;
    std::span<const int> raws(s.raws);
    d.mean_raw_left = side_mean(raws.subspan(0, 4));
    d.mean_raw_right = side_mean(raws.subspan(4, 4));
    d.d_left = raw_to_distance(d.mean_raw_left, sonar_max_range);
    d.d_right = raw_to_distance(d.mean_raw_right, sonar_max_range);
    d.midpoint = midpoint(d.d_left, d.d_right);
    d.engaged = d.midpoint < p.engage_gate;

    const double base = p.base_speed();
    d.command = {base, base};
    if (d.engaged) {
        double err = d.midpoint - d.d_left;
        if (err > p.band)
            d.command = {base + p.steer_delta, base - p.steer_delta};  // left side near, veer right
        else if (err < -p.band)
            d.command = {base - p.steer_delta, base + p.steer_delta};
    }
    return d;
}

}  // namespace patrolsim

#include "patrolsim/sonar.hpp"

#include <cmath>
#include <stdexcept>

namespace patrolsim {

int distance_to_raw(double distance, double max_range) {
    if (!(distance >= 0.0 && distance <= max_range))
        throw std::invalid_argument("distance_to_raw: distance outside [0, max_range]");
    long raw = std::lround(1024.0 * (1.0 - distance / max_range));
    if (raw < 0) raw = 0;
    if (raw > 1024) raw = 1024;
    if (raw == 0) raw = 1;  // keep 0 reserved for "no return"
    return static_cast<int>(raw);
}

double raw_to_distance(double raw, double max_range) {
    if (!(raw >= 0.0 && raw <= 1024.0))
        throw std::invalid_argument("raw_to_distance: raw outside [0, 1024]");
    return max_range * (1.0 - raw / 1024.0);
}

SonarScan scan(const WorldGeometry& world, const Pose& pose, const SonarLayout& layout,
               std::span<const CircleBody> bodies, int skip_body) {
    SonarScan out;
    for (size_t i = 0; i < layout.bearings.size(); ++i) {
        Vec2 dir = unit_from_angle(pose.heading + layout.bearings[i]);
        auto hit = world.ray_cast(pose.p, dir, layout.max_range, bodies, skip_body);
        if (hit && hit->incidence <= layout.incidence_cutoff + 1e-12)
            out.raws[i] = distance_to_raw(hit->distance, layout.max_range);
        else
            out.raws[i] = 0;
    }
    return out;
}

}  // namespace patrolsim

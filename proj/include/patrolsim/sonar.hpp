#pragma once

#include <array>
#include <span>

#include "patrolsim/world.hpp"

namespace patrolsim {

struct SonarScan {
    std::array<int, 8> raws{};  // 0 = no return, else 1..1024 (near = high)
};

// raw = round(1024 * (1 - d/5)); a rounded raw of 0 is reported as 1 so that 0
// stays reserved for "no return"; throws std::invalid_argument outside [0, max_range]
int distance_to_raw(double distance, double max_range = 5.0);

// accepts fractional raws (side means); throws std::invalid_argument outside [0, 1024]
double raw_to_distance(double raw, double max_range = 5.0);

SonarScan scan(const WorldGeometry& world, const Pose& pose, const SonarLayout& layout,
               std::span<const CircleBody> bodies = {}, int skip_body = -1);

}  // namespace patrolsim

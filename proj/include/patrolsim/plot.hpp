#pragma once

#include <string>

#include "patrolsim/metrics.hpp"

namespace patrolsim {

// self-contained SVG line charts; single-point series render as markers
std::string emit_plot_path(const std::vector<PathMetricsRow>& rows);
std::string emit_plot_follow(const FollowMetrics& metrics);

}  // namespace patrolsim

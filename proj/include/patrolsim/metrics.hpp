#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patrolsim/sim.hpp"

namespace patrolsim {

struct PathMetricsRow {
    double time_s = 0.0;
    double d_left = 0.0;
    double d_right = 0.0;
    double total = 0.0;
    double suggested = 0.0;
    std::optional<double> actual;  // defined only when both sides detected (< 5 m)
};

// nearest-tick samples of one robot's traced side distances
std::vector<PathMetricsRow> path_metrics(std::span<const TraceRecord> trace, int robot_id,
                                         std::span<const double> times);

struct FollowMetricsRow {
    double time_s = 0.0;
    double displacement = 0.0;             // intruder travel from its first trace position
    std::vector<double> distances;         // follower center to intruder center
};

struct FollowMetrics {
    std::vector<int> follower_ids;
    std::vector<FollowMetricsRow> rows;
};

FollowMetrics follow_metrics(std::span<const TraceRecord> trace, std::span<const int> follower_ids,
                             IntruderColor color, std::span<const double> times);

std::string path_metrics_to_csv(std::span<const PathMetricsRow> rows);
std::vector<PathMetricsRow> path_metrics_from_csv(const std::string& text);

std::string follow_metrics_to_csv(const FollowMetrics& m);
FollowMetrics follow_metrics_from_csv(const std::string& text);

}  // namespace patrolsim

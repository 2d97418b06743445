#include "patrolsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "patrolsim/trace.hpp"

namespace patrolsim {

namespace {

std::int64_t nearest_tick(double t) { return std::llround(t * 1000.0 / kTickMs); }

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_num(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("metrics: bad " + what + " value '" + s + "'");
}

}  // namespace

std::vector<PathMetricsRow> path_metrics(std::span<const TraceRecord> trace, int robot_id,
                                         std::span<const double> times) {
    if (trace.empty()) throw InputError("path_metrics: empty trace");
    const std::string key = std::to_string(robot_id);
    std::map<std::int64_t, const TraceRecord*> by_tick;
    for (const TraceRecord& r : trace)
        if (r.robot == key) by_tick[r.tick] = &r;
    if (by_tick.empty())
        throw InputError("path_metrics: robot id " + key + " not present in trace");
    const std::int64_t last = by_tick.rbegin()->first;

    std::vector<PathMetricsRow> rows;
    rows.reserve(times.size());
    for (double t : times) {
        std::int64_t k = nearest_tick(t);
        if (t < 0.0 || k > last)
            throw InputError("path_metrics: sample time " + format_g6(t) +
                                     " outside the trace span");
        auto it = by_tick.find(k);
        if (it == by_tick.end())
            throw InputError("path_metrics: no record at tick " + std::to_string(k));
        const TraceRecord& r = *it->second;
        PathMetricsRow row;
        row.time_s = t;
        row.d_left = r.d_left;
        row.d_right = r.d_right;
        row.total = r.d_left + r.d_right;
        row.suggested = row.total / 2.0;
        if (r.d_left < 5.0 && r.d_right < 5.0) row.actual = std::max(r.d_left, r.d_right);
        rows.push_back(row);
    }
    return rows;
}

FollowMetrics follow_metrics(std::span<const TraceRecord> trace, std::span<const int> follower_ids,
                             IntruderColor color, std::span<const double> times) {
    if (trace.empty()) throw InputError("follow_metrics: empty trace");
    const std::string intruder_key = std::string("intruder:") + to_string(color);
    std::map<std::int64_t, const TraceRecord*> intruder_rows;
    std::map<int, std::map<std::int64_t, const TraceRecord*>> robot_rows;
    for (int id : follower_ids) robot_rows[id];
    for (const TraceRecord& r : trace) {
        if (r.robot == intruder_key) {
            intruder_rows[r.tick] = &r;
            continue;
        }
        for (int id : follower_ids)
            if (r.robot == std::to_string(id)) robot_rows[id][r.tick] = &r;
    }
    if (intruder_rows.empty())
        throw InputError(std::string("follow_metrics: no ") + to_string(color) +
                                 " intruder in trace");
    for (int id : follower_ids)
        if (robot_rows[id].empty())
            throw InputError("follow_metrics: robot id " + std::to_string(id) +
                                     " not present in trace");

    const TraceRecord& start = *intruder_rows.begin()->second;
    const std::int64_t last = intruder_rows.rbegin()->first;

    FollowMetrics out;
    out.follower_ids.assign(follower_ids.begin(), follower_ids.end());
    for (double t : times) {
        std::int64_t k = nearest_tick(t);
        if (t < 0.0 || k > last)
            throw InputError("follow_metrics: sample time " + format_g6(t) +
                                     " outside the trace span");
        auto it = intruder_rows.find(k);
        if (it == intruder_rows.end())
            throw InputError("follow_metrics: no record at tick " + std::to_string(k));
        const TraceRecord& in = *it->second;
        FollowMetricsRow row;
        row.time_s = t;
        row.displacement = std::hypot(in.x - start.x, in.y - start.y);
        for (int id : follower_ids) {
            auto rit = robot_rows[id].find(k);
            if (rit == robot_rows[id].end())
                throw InputError("follow_metrics: no record for robot " +
                                         std::to_string(id) + " at tick " + std::to_string(k));
            const TraceRecord& r = *rit->second;
            row.distances.push_back(std::hypot(r.x - in.x, r.y - in.y));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string path_metrics_to_csv(std::span<const PathMetricsRow> rows) {
    std::ostringstream ss;
    ss << "time_s,d_left,d_right,total,suggested,actual\n";
    for (const PathMetricsRow& r : rows) {
        ss << format_g6(r.time_s) << ',' << format_g6(r.d_left) << ',' << format_g6(r.d_right)
           << ',' << format_g6(r.total) << ',' << format_g6(r.suggested) << ',';
        if (r.actual) ss << format_g6(*r.actual);
        ss << "\n";
    }
    return ss.str();
}

std::vector<PathMetricsRow> path_metrics_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "time_s,d_left,d_right,total,suggested,actual")
        throw InputError("metrics: not a path metrics file");
    std::vector<PathMetricsRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 6) throw InputError("metrics: expected 6 fields per path row");
        PathMetricsRow r;
        r.time_s = parse_num(f[0], "time_s");
        r.d_left = parse_num(f[1], "d_left");
        r.d_right = parse_num(f[2], "d_right");
        r.total = parse_num(f[3], "total");
        r.suggested = parse_num(f[4], "suggested");
        if (!f[5].empty()) r.actual = parse_num(f[5], "actual");
        rows.push_back(r);
    }
    return rows;
}

std::string follow_metrics_to_csv(const FollowMetrics& m) {
    std::ostringstream ss;
    ss << "time_s,intruder_displacement";
    for (int id : m.follower_ids) ss << ",dist_robot_" << id;
    ss << "\n";
    for (const FollowMetricsRow& r : m.rows) {
        ss << format_g6(r.time_s) << ',' << format_g6(r.displacement);
        for (double d : r.distances) ss << ',' << format_g6(d);
        ss << "\n";
    }
    return ss.str();
}

FollowMetrics follow_metrics_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw InputError("metrics: empty file");
    auto head = split_csv(line);
    if (head.size() < 3 || head[0] != "time_s" || head[1] != "intruder_displacement")
        throw InputError("metrics: not a follow metrics file");
    FollowMetrics m;
    const std::string prefix = "dist_robot_";
    for (size_t i = 2; i < head.size(); ++i) {
        if (head[i].rfind(prefix, 0) != 0)
            throw InputError("metrics: unexpected column '" + head[i] + "'");
        m.follower_ids.push_back(static_cast<int>(parse_num(head[i].substr(prefix.size()),
                                                            "follower id")));
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != head.size())
            throw InputError("metrics: ragged follow metrics row");
        FollowMetricsRow r;
        r.time_s = parse_num(f[0], "time_s");
        r.displacement = parse_num(f[1], "intruder_displacement");
        for (size_t i = 2; i < f.size(); ++i) r.distances.push_back(parse_num(f[i], "distance"));
        m.rows.push_back(std::move(r));
    }
    return m;
}

}  // namespace patrolsim

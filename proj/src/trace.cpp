#include "patrolsim/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace patrolsim {

namespace {

const char* kHeader =
    "tick,time_s,robot,x,y,heading,mode,d_left,d_right,midpoint,chosen_color,"
    "left_pixels,right_pixels,blue_min_range,green_min_range,cmd_left,cmd_right,clearance_m";

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

double to_double(const std::string& s, int line_no) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("trace line " + std::to_string(line_no) + ": bad numeric field '" +
                             s + "'");
}

}  // namespace

std::string format_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_trace(std::ostream& os, std::span<const TraceRecord> records) {
    os << kHeader << "\n";
    for (const TraceRecord& r : records) {
        os << r.tick << ',' << format_g6(r.time_s) << ',' << r.robot << ',' << format_g6(r.x)
           << ',' << format_g6(r.y) << ',' << format_g6(r.heading) << ',' << r.mode << ','
           << format_g6(r.d_left) << ',' << format_g6(r.d_right) << ',' << format_g6(r.midpoint)
           << ',' << r.chosen_color << ',' << r.left_pixels << ',' << r.right_pixels << ','
           << format_g6(r.blue_min_range) << ',' << format_g6(r.green_min_range) << ','
           << format_g6(r.cmd_left) << ',' << format_g6(r.cmd_right) << ','
           << format_g6(r.clearance_m) << "\n";
    }
}

std::string trace_to_string(std::span<const TraceRecord> records) {
    std::ostringstream ss;
    write_trace(ss, records);
    return ss.str();
}

std::vector<TraceRecord> read_trace(std::istream& is) {
    std::vector<TraceRecord> out;
    std::string line;
    int line_no = 0;
    if (!std::getline(is, line)) throw InputError("trace: empty input");
    ++line_no;
    if (line != kHeader) throw InputError("trace: unrecognized header row");
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 18)
            throw InputError("trace line " + std::to_string(line_no) +
                                     ": expected 18 fields, found " + std::to_string(f.size()));
        TraceRecord r;
        r.tick = static_cast<std::int64_t>(to_double(f[0], line_no));
        r.time_s = to_double(f[1], line_no);
        r.robot = f[2];
        r.x = to_double(f[3], line_no);
        r.y = to_double(f[4], line_no);
        r.heading = to_double(f[5], line_no);
        r.mode = f[6];
        r.d_left = to_double(f[7], line_no);
        r.d_right = to_double(f[8], line_no);
        r.midpoint = to_double(f[9], line_no);
        r.chosen_color = f[10];
        r.left_pixels = static_cast<long>(to_double(f[11], line_no));
        r.right_pixels = static_cast<long>(to_double(f[12], line_no));
        r.blue_min_range = to_double(f[13], line_no);
        r.green_min_range = to_double(f[14], line_no);
        r.cmd_left = to_double(f[15], line_no);
        r.cmd_right = to_double(f[16], line_no);
        r.clearance_m = to_double(f[17], line_no);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TraceRecord> read_trace_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open trace file: " + path);
    return read_trace(f);
}

}  // namespace patrolsim

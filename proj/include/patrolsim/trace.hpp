#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "patrolsim/sim.hpp"

namespace patrolsim {

// malformed or inconsistent input content: traces, metrics files, sample queries.
// IO failures (unopenable paths, failed writes) stay plain runtime_errors.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// %.6g, matching the trace format
std::string format_g6(double v);

void write_trace(std::ostream& os, std::span<const TraceRecord> records);
std::string trace_to_string(std::span<const TraceRecord> records);
std::vector<TraceRecord> read_trace(std::istream& is);
std::vector<TraceRecord> read_trace_file(const std::string& path);

}  // namespace patrolsim

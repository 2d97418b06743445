#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "patrolsim/metrics.hpp"
#include "patrolsim/plot.hpp"
#include "patrolsim/sim.hpp"
#include "patrolsim/trace.hpp"

namespace py = pybind11;
using namespace patrolsim;

namespace {

SonarScan scan_from(const std::vector<int>& raws) {
    if (raws.size() != 8) throw InputError("expected exactly 8 sonar raws");
    SonarScan s;
    std::copy(raws.begin(), raws.end(), s.raws.begin());
    return s;
}

SegmentationResult seg_from(long blue_left, long blue_right, double blue_min, long green_left,
                            long green_right, double green_min) {
    SegmentationResult seg;
    seg.blue = {blue_left, blue_right, blue_min};
    seg.green = {green_left, green_right, green_min};
    return seg;
}

std::vector<TraceRecord> trace_from_csv(const std::string& text) {
    std::istringstream in(text);
    return read_trace(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "deterministic multi-robot patrol simulator core";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ScenarioError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const InputError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const std::invalid_argument& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // range finder units
    m.def("distance_to_raw", &distance_to_raw, py::arg("distance"), py::arg("max_range") = 5.0,
          "quantize a distance to the sonar's raw scale");
    m.def("raw_to_distance", &raw_to_distance, py::arg("raw"), py::arg("max_range") = 5.0,
          "invert the sonar's raw scale (fractional raws allowed)");

    // sonar navigation
    m.def(
        "side_mean", [](const std::vector<int>& raws) { return side_mean(raws); },
        py::arg("raws"), "mean of the nonzero raws, 0 if all are zero");
    m.def("midpoint", &midpoint, py::arg("d_left"), py::arg("d_right"));
    m.def(
        "obstacle_clear",
        [](const std::vector<int>& raws, int gate) {
            return obstacle_clear(scan_from(raws), gate);
        },
        py::arg("raws"), py::arg("clear_raw_gate") = 700,
        "true iff every raw is strictly below the gate");
    m.def(
        "nav_command",
        [](const std::vector<int>& raws) {
            ControllerParams p;
            NavDecision d = nav_command(scan_from(raws), p);
            py::dict out;
            out["mean_raw_left"] = d.mean_raw_left;
            out["mean_raw_right"] = d.mean_raw_right;
            out["d_left"] = d.d_left;
            out["d_right"] = d.d_right;
            out["midpoint"] = d.midpoint;
            out["engaged"] = d.engaged;
            out["cmd_left"] = d.command.left;
            out["cmd_right"] = d.command.right;
            return out;
        },
        py::arg("raws"), "wall-centering wheel command from one 8-element sonar scan");

    // perception and pursuit
    m.def(
        "classify_pixel",
        [](int r, int g, int b) {
            PixelClass c = classify_pixel(static_cast<std::uint8_t>(r),
                                          static_cast<std::uint8_t>(g),
                                          static_cast<std::uint8_t>(b));
            return c == PixelClass::Blue ? "blue" : c == PixelClass::Green ? "green" : "none";
        },
        py::arg("r"), py::arg("g"), py::arg("b"));
    m.def(
        "select_target",
        [](long blue_left, long blue_right, double blue_min, long green_left, long green_right,
           double green_min, double range_max) {
            TargetChoice c = select_target(
                seg_from(blue_left, blue_right, blue_min, green_left, green_right, green_min),
                range_max);
            py::dict out;
            out["color"] = std::string(to_string(c.color));
            out["chosen_range"] = c.chosen_range;
            out["left_pixels"] = c.left_pixels;
            out["right_pixels"] = c.right_pixels;
            return out;
        },
        py::arg("blue_left"), py::arg("blue_right"), py::arg("blue_min"), py::arg("green_left"),
        py::arg("green_right"), py::arg("green_min"), py::arg("range_max") = 10.0,
        "probability-of-danger target choice: the nearer color wins, ties go to blue");
    m.def(
        "pursuit_command",
        [](long blue_left, long blue_right, double blue_min, long green_left, long green_right,
           double green_min) {
            ControllerParams p;
            PursuitDecision d = pursuit_command(
                seg_from(blue_left, blue_right, blue_min, green_left, green_right, green_min), p);
            py::dict out;
            out["mode"] = std::string(to_string(d.mode));
            out["color"] = std::string(to_string(d.choice.color));
            out["total_pixels"] = d.total_pixels;
            out["cmd_left"] = d.command.left;
            out["cmd_right"] = d.command.right;
            return out;
        },
        py::arg("blue_left"), py::arg("blue_right"), py::arg("blue_min"), py::arg("green_left"),
        py::arg("green_right"), py::arg("green_min"),
        "pixel-balance chase command from one segmented view");

    // motion
    m.def(
        "integrate",
        [](double x, double y, double heading, double left, double right, double dt) {
            Pose p = integrate(Pose{{x, y}, heading}, WheelCommand{left, right}, BodyGeometry{},
                               dt);
            return py::make_tuple(p.p.x, p.p.y, p.heading);
        },
        py::arg("x"), py::arg("y"), py::arg("heading"), py::arg("left"), py::arg("right"),
        py::arg("dt") = kDt, "closed-form unicycle arc for one wheel command");

    // scenarios and simulation
    m.def(
        "normalize_scenario", [](const std::string& text) {
            return serialize_scenario(parse_scenario(text));
        },
        py::arg("json_text"), "parse, validate, and re-serialize a scenario");
    m.def(
        "scenario_summary",
        [](const std::string& path) {
            Scenario sc = load_scenario(path);
            py::dict out;
            out["robots"] = sc.robots.size();
            out["intruders"] = sc.intruders.size();
            out["obstacles"] = sc.obstacles.size();
            out["duration_s"] = sc.duration_s;
            return out;
        },
        py::arg("path"));
    m.def(
        "run_scenario_file",
        [](const std::string& path, std::optional<double> duration) {
            return trace_to_string(run(load_scenario(path), nullptr, duration));
        },
        py::arg("path"), py::arg("duration") = py::none(),
        "simulate a scenario file and return the trace CSV");
    m.def(
        "run_scenario",
        [](const std::string& json_text, std::optional<double> duration) {
            return trace_to_string(run(parse_scenario(json_text), nullptr, duration));
        },
        py::arg("json_text"), py::arg("duration") = py::none(),
        "simulate a scenario given as JSON text and return the trace CSV");

    // static world queries
    m.def(
        "clearance_at",
        [](const std::string& json_text, double x, double y) {
            Scenario sc = parse_scenario(json_text);
            WorldGeometry w(sc.bounds, sc.obstacles);
            return w.clearance({x, y}, sc.params.body.body_radius);
        },
        py::arg("json_text"), py::arg("x"), py::arg("y"),
        "surface clearance of a robot body against the static geometry");
    m.def(
        "scan_at",
        [](const std::string& json_text, double x, double y, double heading) {
            Scenario sc = parse_scenario(json_text);
            WorldGeometry w(sc.bounds, sc.obstacles);
            SonarScan s = scan(w, Pose{{x, y}, heading}, sc.params.sonar);
            return std::vector<int>(s.raws.begin(), s.raws.end());
        },
        py::arg("json_text"), py::arg("x"), py::arg("y"), py::arg("heading"),
        "eight sonar raws against the static geometry");

    // analysis
    m.def(
        "path_metrics_csv",
        [](const std::string& trace_csv, int robot_id, const std::vector<double>& times) {
            return path_metrics_to_csv(path_metrics(trace_from_csv(trace_csv), robot_id, times));
        },
        py::arg("trace_csv"), py::arg("robot_id"), py::arg("times"));
    m.def(
        "follow_metrics_csv",
        [](const std::string& trace_csv, const std::vector<int>& followers,
           const std::string& color, const std::vector<double>& times) {
            auto c = intruder_color_from_string(color);
            if (!c) throw InputError("color must be 'blue' or 'green'");
            return follow_metrics_to_csv(
                follow_metrics(trace_from_csv(trace_csv), followers, *c, times));
        },
        py::arg("trace_csv"), py::arg("followers"), py::arg("color"), py::arg("times"));
    m.def(
        "plot_path_svg",
        [](const std::string& metrics_csv) {
            return emit_plot_path(path_metrics_from_csv(metrics_csv));
        },
        py::arg("metrics_csv"));
    m.def(
        "plot_follow_svg",
        [](const std::string& metrics_csv) {
            return emit_plot_follow(follow_metrics_from_csv(metrics_csv));
        },
        py::arg("metrics_csv"));

    m.attr("TICK_MS") = kTickMs;
    m.attr("TICK_S") = kDt;
}

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patrolsim/metrics.hpp"
#include "patrolsim/plot.hpp"
#include "patrolsim/sim.hpp"
#include "patrolsim/trace.hpp"
#include "patrolsim/world.hpp"

namespace {

using namespace patrolsim;

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

void cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                  std::optional<double> duration, const std::string& frames_dir) {
    Scenario sc = load_scenario(scenario_path);
    FrameHook hook = nullptr;
    if (!frames_dir.empty()) {
        std::filesystem::create_directories(frames_dir);
        hook = [&frames_dir](std::int64_t tick, int robot_id, const CameraFrame& frame) {
            char name[64];
            std::snprintf(name, sizeof(name), "t%06lld_r%d.ppm",
                          static_cast<long long>(tick), robot_id);
            write_ppm(frame, frames_dir + "/" + name);
        };
    }
    std::vector<TraceRecord> trace = run(sc, hook, duration);
    write_text_file(out_path, trace_to_string(trace));
    std::cout << "wrote " << out_path << ": " << trace.size() << " records (" << sc.robots.size()
              << " robots, " << sc.intruders.size() << " intruders)\n";
}

void cmd_analyze_path(const std::string& trace_path, int robot_id,
                      const std::vector<double>& times, const std::string& out_path) {
    auto trace = read_trace_file(trace_path);
    auto rows = path_metrics(trace, robot_id, times);
    write_text_file(out_path, path_metrics_to_csv(rows));
    std::cout << "wrote " << out_path << ": " << rows.size() << " rows\n";
}

void cmd_analyze_follow(const std::string& trace_path, const std::vector<int>& followers,
                        const std::string& color, const std::vector<double>& times,
                        const std::string& out_path) {
    auto c = intruder_color_from_string(color);
    if (!c) throw InputError("--color must be 'blue' or 'green'");
    auto trace = read_trace_file(trace_path);
    FollowMetrics m = follow_metrics(trace, followers, *c, times);
    write_text_file(out_path, follow_metrics_to_csv(m));
    std::cout << "wrote " << out_path << ": " << m.rows.size() << " rows\n";
}

void cmd_plot(const std::string& metrics_path, const std::string& kind,
              const std::string& out_path) {
    std::ifstream f(metrics_path);
    if (!f) throw std::runtime_error("cannot open metrics file: " + metrics_path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    std::string svg;
    if (kind == "path")
        svg = emit_plot_path(path_metrics_from_csv(text));
    else
        svg = emit_plot_follow(follow_metrics_from_csv(text));
    write_text_file(out_path, svg);
    std::cout << "wrote " << out_path << "\n";
}

void cmd_validate(const std::string& scenario_path) {
    Scenario sc = load_scenario(scenario_path);
    std::cout << scenario_path << ": ok (" << sc.robots.size() << " robots, "
              << sc.intruders.size() << " intruders, " << sc.obstacles.size()
              << " obstacles, " << format_g6(sc.duration_s) << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic multi-robot patrol simulator and trace analysis"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a scenario and write its trace");
    std::string sim_scenario, sim_out, sim_frames;
    double sim_duration = -1.0;
    sim->add_option("--scenario", sim_scenario, "scenario file")->required();
    sim->add_option("--out", sim_out, "output trace CSV")->required();
    auto* dur_opt = sim->add_option("--duration", sim_duration, "override duration, seconds")
                        ->check(CLI::NonNegativeNumber);
    sim->add_option("--frames", sim_frames, "directory for per-tick camera dumps (P6)");
    sim->callback([&] {
        std::optional<double> dur;
        if (dur_opt->count() > 0) dur = sim_duration;
        cmd_simulate(sim_scenario, sim_out, dur, sim_frames);
    });

    // analyze-path
    auto* ap = app.add_subcommand("analyze-path", "per-robot side distances at sample times");
    std::string ap_trace, ap_out;
    int ap_robot = 0;
    std::vector<double> ap_times;
    ap->add_option("--trace", ap_trace, "trace CSV from simulate")->required();
    ap->add_option("--robot", ap_robot, "robot id")->required();
    ap->add_option("--times", ap_times, "sample times, seconds")->required()->delimiter(',');
    ap->add_option("--out", ap_out, "output metrics CSV")->required();
    ap->callback([&] { cmd_analyze_path(ap_trace, ap_robot, ap_times, ap_out); });

    // analyze-follow
    auto* af = app.add_subcommand("analyze-follow",
                                  "follower-to-intruder distances at sample times");
    std::string af_trace, af_color, af_out;
    std::vector<int> af_followers;
    std::vector<double> af_times;
    af->add_option("--trace", af_trace, "trace CSV from simulate")->required();
    af->add_option("--followers", af_followers, "robot ids")->required()->delimiter(',');
    af->add_option("--color", af_color, "intruder color")->required();
    af->add_option("--times", af_times, "sample times, seconds")->required()->delimiter(',');
    af->add_option("--out", af_out, "output metrics CSV")->required();
    af->callback([&] { cmd_analyze_follow(af_trace, af_followers, af_color, af_times, af_out); });

    // plot
    auto* pl = app.add_subcommand("plot", "render a metrics CSV as an SVG chart");
    std::string pl_metrics, pl_kind, pl_out;
    pl->add_option("--metrics", pl_metrics, "metrics CSV from an analyze verb")->required();
    pl->add_option("--kind", pl_kind, "metrics kind")
        ->required()
        ->check(CLI::IsMember({"path", "follow"}));
    pl->add_option("--out", pl_out, "output SVG file")->required();
    pl->callback([&] { cmd_plot(pl_metrics, pl_kind, pl_out); });

    // validate
    auto* va = app.add_subcommand("validate", "check a scenario file against all constraints");
    std::string va_scenario;
    va->add_option("--scenario", va_scenario, "scenario file")->required();
    va->callback([&] { cmd_validate(va_scenario); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

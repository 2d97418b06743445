#include "patrolsim/sim.hpp"

#include <algorithm>
#include <cmath>

namespace patrolsim {

Pose integrate(const Pose& pose, const WheelCommand& cmd, const BodyGeometry& geom, double dt) {
    const double v = geom.wheel_radius * (cmd.left + cmd.right) / 2.0;
    const double w = geom.wheel_radius * (cmd.right - cmd.left) / geom.axle_track;
    Pose out = pose;
    if (std::abs(w) < 1e-9) {
        out.p = pose.p + unit_from_angle(pose.heading) * (v * dt);
        return out;
    }
    const double radius = v / w;
    const double th1 = pose.heading + w * dt;
    out.p.x = pose.p.x + radius * (std::sin(th1) - std::sin(pose.heading));
    out.p.y = pose.p.y - radius * (std::cos(th1) - std::cos(pose.heading));
    out.heading = norm_angle(th1);
    return out;
}

Pose intruder_step(const Intruder& intruder, double t) {
    const auto& wps = intruder.waypoints;
    Pose out;
    auto segment_heading = [&](size_t seg) {
        // direction of the nearest preceding segment with actual displacement
        for (size_t k = seg + 1; k-- > 0;) {
            Vec2 d = wps[k + 1].p - wps[k].p;
            if (d.norm() > 1e-12) return std::atan2(d.y, d.x);
        }
        return 0.0;
    };
    if (wps.size() == 1 || t <= wps.front().t) {
        out.p = wps.front().p;
        out.heading = wps.size() > 1 ? segment_heading(0) : 0.0;
        return out;
    }
    if (t >= wps.back().t) {
        out.p = wps.back().p;
        out.heading = segment_heading(wps.size() - 2);
        return out;
    }
    for (size_t k = 0; k + 1 < wps.size(); ++k) {
        if (t <= wps[k + 1].t) {
            const double f = (t - wps[k].t) / (wps[k + 1].t - wps[k].t);
            out.p = wps[k].p + (wps[k + 1].p - wps[k].p) * f;
            out.heading = segment_heading(k);
            return out;
        }
    }
    out.p = wps.back().p;  // unreachable, loop above brackets t
    return out;
}

SimState initial_state(const Scenario& scenario) {
    SimState st;
    st.robots.reserve(scenario.robots.size());
    for (const RobotSpec& r : scenario.robots) st.robots.push_back({r.id, r.pose, Mode::Nav, {}});
    std::sort(st.robots.begin(), st.robots.end(),
              [](const RobotState& a, const RobotState& b) { return a.id < b.id; });
    for (const Intruder& in : scenario.intruders)
        st.intruders.push_back({in.color, intruder_step(in, 0.0)});
    return st;
}

namespace {

std::vector<CircleBody> body_set(const SimState& st, double body_radius) {
    std::vector<CircleBody> bodies;
    bodies.reserve(st.robots.size() + st.intruders.size());
    for (const RobotState& r : st.robots) bodies.push_back({r.pose.p, body_radius});
    for (const IntruderState& in : st.intruders) bodies.push_back({in.pose.p, body_radius});
    return bodies;
}

// keep at least this much air between surfaces when a move has to be cut short
constexpr double kContactMargin = 1e-3;

Pose clamp_motion(const WorldGeometry& world, const Pose& from, const Pose& to,
                  const WheelCommand& cmd, const BodyGeometry& geom, double dt,
                  std::span<const CircleBody> others) {
    auto clear_at = [&](const Pose& p) {
        return world.clearance(p.p, geom.body_radius, others) >= kContactMargin;
    };
    if (clear_at(to)) return to;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 40; ++i) {
        double mid = (lo + hi) / 2.0;
        if (clear_at(integrate(from, cmd, geom, mid * dt)))
            lo = mid;
        else
            hi = mid;
    }
    return integrate(from, cmd, geom, lo * dt);
}

}  // namespace

void step(SimState& state, const Scenario& scenario, const WorldGeometry& world,
          std::vector<TraceRecord>* out, const FrameHook& frames) {
    const ScenarioParams& P = scenario.params;
    const double t = state.time_s();
    const size_t nr = state.robots.size();

    const std::vector<CircleBody> bodies = body_set(state, P.body.body_radius);

    // visual bodies mirror the physical set: robots gray, intruders colored
    std::vector<VisualBody> visuals;
    visuals.reserve(bodies.size());
    for (const RobotState& r : state.robots)
        visuals.push_back({r.pose.p, P.body.body_radius, P.visual.robot_height / 2.0, kRobotColor});
    for (const IntruderState& in : state.intruders)
        visuals.push_back({in.pose.p, P.visual.intruder_radius, P.visual.intruder_height / 2.0,
                           in.color == IntruderColor::Blue ? kBlueColor : kGreenColor});

    std::vector<WheelCommand> cmds(nr);
    for (size_t i = 0; i < nr; ++i) {
        RobotState& r = state.robots[i];
        const SonarScan raws = scan(world, r.pose, P.sonar, bodies, static_cast<int>(i));
        const NavDecision nav = nav_command(raws, P.controller, P.sonar.max_range);

        TraceRecord rec;
        rec.tick = state.tick;
        rec.time_s = t;
        rec.robot = std::to_string(r.id);
        rec.x = r.pose.p.x;
        rec.y = r.pose.p.y;
        rec.heading = r.pose.heading;
        rec.d_left = nav.d_left;
        rec.d_right = nav.d_right;
        rec.midpoint = nav.midpoint;
        rec.chosen_color = "none";
        rec.blue_min_range = P.controller.range_max;
        rec.green_min_range = P.controller.range_max;

        if (!obstacle_clear(raws, P.controller.clear_raw_gate)) {
            r.mode = Mode::Nav;
            cmds[i] = nav.command;
            if (frames) {
                RenderOutput view = render(world, r.pose, P.camera, visuals,
                                           static_cast<int>(i), P.visual.obstacle_height / 2.0);
                frames(state.tick, r.id, view.frame);
            }
        } else {
            RenderOutput view = render(world, r.pose, P.camera, visuals, static_cast<int>(i),
                                       P.visual.obstacle_height / 2.0);
            const SegmentationResult seg = segment(view.frame, view.depth);
            const PursuitDecision pd = pursuit_command(seg, P.controller);
            r.mode = pd.mode;
            cmds[i] = pd.command;
            rec.chosen_color = to_string(pd.choice.color);
            rec.left_pixels = pd.choice.left_pixels;
            rec.right_pixels = pd.choice.right_pixels;
            rec.blue_min_range = seg.blue.min_range;
            rec.green_min_range = seg.green.min_range;
            if (frames) frames(state.tick, r.id, view.frame);
        }
        r.last_command = cmds[i];
        rec.mode = to_string(r.mode);
        rec.cmd_left = cmds[i].left;
        rec.cmd_right = cmds[i].right;
        rec.clearance_m =
            world.clearance(r.pose.p, P.body.body_radius, bodies, static_cast<int>(i));
        if (out) out->push_back(std::move(rec));
    }

    if (out) {
        for (size_t j = 0; j < state.intruders.size(); ++j) {
            const IntruderState& in = state.intruders[j];
            TraceRecord rec;
            rec.tick = state.tick;
            rec.time_s = t;
            rec.robot = std::string("intruder:") + to_string(in.color);
            rec.x = in.pose.p.x;
            rec.y = in.pose.p.y;
            rec.heading = in.pose.heading;
            rec.mode = "intruder";
            rec.d_left = P.sonar.max_range;
            rec.d_right = P.sonar.max_range;
            rec.midpoint = P.sonar.max_range;
            rec.chosen_color = "none";
            rec.blue_min_range = P.controller.range_max;
            rec.green_min_range = P.controller.range_max;
            rec.clearance_m = world.clearance(in.pose.p, P.body.body_radius, bodies,
                                              static_cast<int>(nr + j));
            out->push_back(std::move(rec));
        }
    }

    // act: robots move on their commands, intruders follow the script
    std::vector<Pose> proposed(nr);
    for (size_t i = 0; i < nr; ++i)
        proposed[i] = integrate(state.robots[i].pose, cmds[i], P.body, kDt);
    const double t_next = static_cast<double>((state.tick + 1) * kTickMs) / 1000.0;
    for (size_t j = 0; j < state.intruders.size(); ++j)
        state.intruders[j].pose = intruder_step(scenario.intruders[j], t_next);

    for (size_t i = 0; i < nr; ++i) {
        std::vector<CircleBody> others;
        others.reserve(nr - 1 + state.intruders.size());
        for (size_t k = 0; k < nr; ++k) {
            if (k == i) continue;
            others.push_back({k < i ? state.robots[k].pose.p : proposed[k].p, P.body.body_radius});
        }
        for (const IntruderState& in : state.intruders)
            others.push_back({in.pose.p, P.body.body_radius});
        state.robots[i].pose =
            clamp_motion(world, state.robots[i].pose, proposed[i], cmds[i], P.body, kDt, others);
    }
    ++state.tick;
}

std::vector<TraceRecord> run(const Scenario& scenario, const FrameHook& frames,
                             std::optional<double> duration_override) {
    const double duration = duration_override.value_or(scenario.duration_s);
    const std::int64_t duration_ms = std::llround(duration * 1000.0);
    const std::int64_t ticks = duration_ms / kTickMs;

    WorldGeometry world({scenario.bounds.min, scenario.bounds.max}, scenario.obstacles);
    SimState state = initial_state(scenario);
    std::vector<TraceRecord> trace;
    trace.reserve(static_cast<size_t>(std::max<std::int64_t>(ticks, 0)) *
                  (state.robots.size() + state.intruders.size()));
    for (std::int64_t k = 0; k < ticks; ++k) step(state, scenario, world, &trace, frames);
    return trace;
}

}  // namespace patrolsim

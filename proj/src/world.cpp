#include "patrolsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace patrolsim {

namespace {

constexpr double kRayEps = 1e-9;
constexpr double kWallThickness = 0.05;

struct RawHit {
    double t;
    Vec2 normal;
};

std::optional<RawHit> ray_box(Vec2 o, Vec2 d, const Obstacle& box) {
    double tmin = -std::numeric_limits<double>::infinity();
    double tmax = std::numeric_limits<double>::infinity();
    Vec2 n;
    const double oc[2] = {o.x - box.center.x, o.y - box.center.y};
    const double dd[2] = {d.x, d.y};
    const double h[2] = {box.half_extents.x, box.half_extents.y};
    for (int ax = 0; ax < 2; ++ax) {
        if (std::abs(dd[ax]) < 1e-15) {
            if (oc[ax] < -h[ax] || oc[ax] > h[ax]) return std::nullopt;
            continue;
        }
        double inv = 1.0 / dd[ax];
        double t1 = (-h[ax] - oc[ax]) * inv;
        double t2 = (h[ax] - oc[ax]) * inv;
        double sign = dd[ax] > 0 ? -1.0 : 1.0;
        if (t1 > t2) std::swap(t1, t2);
        if (t1 > tmin) {
            tmin = t1;
            n = ax == 0 ? Vec2{sign, 0.0} : Vec2{0.0, sign};
        }
        tmax = std::min(tmax, t2);
    }
    if (tmax < tmin || tmax < kRayEps) return std::nullopt;
    if (tmin < kRayEps) return std::nullopt;  // starts inside: outward faces only
    return RawHit{tmin, n};
}

std::optional<RawHit> ray_circle(Vec2 o, Vec2 d, Vec2 c, double r) {
    Vec2 f = o - c;
    double b = f.dot(d);
    double q = f.dot(f) - r * r;
    double disc = b * b - q;
    if (disc < 0.0) return std::nullopt;
    double t = -b - std::sqrt(disc);
    if (t < kRayEps) return std::nullopt;
    Vec2 hit = o + d * t - c;
    double n = hit.norm();
    if (n < 1e-15) return std::nullopt;
    return RawHit{t, {hit.x / n, hit.y / n}};
}

double incidence_of(Vec2 dir, Vec2 normal) {
    double c = std::abs(dir.dot(normal));
    return std::acos(std::clamp(c, 0.0, 1.0));
}

double point_box_distance(Vec2 p, const Obstacle& box) {
    double dx = std::abs(p.x - box.center.x) - box.half_extents.x;
    double dy = std::abs(p.y - box.center.y) - box.half_extents.y;
    if (dx < 0.0 && dy < 0.0) return std::max(dx, dy);  // inside, negative
    return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
}

double point_obstacle_distance(Vec2 p, const Obstacle& ob) {
    if (ob.kind == ObstacleKind::Box) return point_box_distance(p, ob);
    return (p - ob.center).norm() - ob.radius;
}

double obstacle_gap(const Obstacle& a, const Obstacle& b) {
    if (a.kind == ObstacleKind::Circle && b.kind == ObstacleKind::Circle)
        return (a.center - b.center).norm() - a.radius - b.radius;
    if (a.kind == ObstacleKind::Box && b.kind == ObstacleKind::Box) {
        double dx = std::abs(a.center.x - b.center.x) - (a.half_extents.x + b.half_extents.x);
        double dy = std::abs(a.center.y - b.center.y) - (a.half_extents.y + b.half_extents.y);
        if (dx < 0.0 && dy < 0.0) return std::max(dx, dy);
        return std::hypot(std::max(dx, 0.0), std::max(dy, 0.0));
    }
    const Obstacle& box = a.kind == ObstacleKind::Box ? a : b;
    const Obstacle& cir = a.kind == ObstacleKind::Box ? b : a;
    return point_box_distance(cir.center, box) - cir.radius;
}

}  // namespace

std::optional<double> ray_circle_hit(Vec2 origin, Vec2 dir, Vec2 center, double radius) {
    auto h = ray_circle(origin, dir, center, radius);
    if (!h) return std::nullopt;
    return h->t;
}

const char* to_string(IntruderColor c) {
    return c == IntruderColor::Blue ? "blue" : "green";
}

std::optional<IntruderColor> intruder_color_from_string(const std::string& s) {
    if (s == "blue") return IntruderColor::Blue;
    if (s == "green") return IntruderColor::Green;
    return std::nullopt;
}

WorldGeometry::WorldGeometry(const Rect& bounds, std::span<const Obstacle> obstacles) {
    solids_.assign(obstacles.begin(), obstacles.end());
    const double t = kWallThickness;
    Vec2 mid{(bounds.min.x + bounds.max.x) / 2.0, (bounds.min.y + bounds.max.y) / 2.0};
    double hx = (bounds.max.x - bounds.min.x) / 2.0;
    double hy = (bounds.max.y - bounds.min.y) / 2.0;
    auto wall = [](Vec2 c, Vec2 h) {
        Obstacle o;
        o.kind = ObstacleKind::Box;
        o.center = c;
        o.half_extents = h;
        return o;
    };
    solids_.push_back(wall({mid.x, bounds.min.y - t}, {hx + 2 * t, t}));
    solids_.push_back(wall({mid.x, bounds.max.y + t}, {hx + 2 * t, t}));
    solids_.push_back(wall({bounds.min.x - t, mid.y}, {t, hy + 2 * t}));
    solids_.push_back(wall({bounds.max.x + t, mid.y}, {t, hy + 2 * t}));
}

std::optional<RayHit> WorldGeometry::ray_cast(Vec2 origin, Vec2 dir, double max_range,
                                              std::span<const CircleBody> bodies,
                                              int skip_body) const {
    std::optional<RawHit> best;
    for (const Obstacle& ob : solids_) {
        std::optional<RawHit> h = ob.kind == ObstacleKind::Box
                                      ? ray_box(origin, dir, ob)
                                      : ray_circle(origin, dir, ob.center, ob.radius);
        if (h && (!best || h->t < best->t)) best = h;
    }
    for (size_t i = 0; i < bodies.size(); ++i) {
        if (static_cast<int>(i) == skip_body) continue;
        auto h = ray_circle(origin, dir, bodies[i].center, bodies[i].radius);
        if (h && (!best || h->t < best->t)) best = h;
    }
    if (!best || best->t > max_range) return std::nullopt;
    return RayHit{best->t, incidence_of(dir, best->normal)};
}

double WorldGeometry::clearance(Vec2 p, double body_radius, std::span<const CircleBody> bodies,
                                int skip_body) const {
    double best = std::numeric_limits<double>::max();
    bool any = false;
    for (const Obstacle& ob : solids_) {
        best = std::min(best, point_obstacle_distance(p, ob));
        any = true;
    }
    for (size_t i = 0; i < bodies.size(); ++i) {
        if (static_cast<int>(i) == skip_body) continue;
        best = std::min(best, (p - bodies[i].center).norm() - bodies[i].radius);
        any = true;
    }
    if (!any) return std::numeric_limits<double>::max();
    return best - body_radius;
}

// ---------------------------------------------------------------------------
// scenario file I/O

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ScenarioError("scenario." + where + ": " + what);
}

double get_num(const ordered_json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

Vec2 get_vec2(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [x, y]");
    return {get_num(j[0], where + "[0]"), get_num(j[1], where + "[1]")};
}

const ordered_json& get_field(const ordered_json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

void read_params(const ordered_json& j, ScenarioParams& p) {
    auto num = [&](const char* key, double& dst) {
        if (auto it = j.find(key); it != j.end()) dst = get_num(*it, std::string("params.") + key);
    };
    auto integer = [&](const char* key, int& dst) {
        if (auto it = j.find(key); it != j.end()) {
            if (!it->is_number_integer()) fail(std::string("params.") + key, "expected an integer");
            dst = it->get<int>();
        }
    };
    num("max_wheel_speed", p.controller.max_wheel_speed);
    num("base_fraction", p.controller.base_fraction);
    num("steer_delta", p.controller.steer_delta);
    num("band", p.controller.band);
    num("engage_gate", p.controller.engage_gate);
    integer("clear_raw_gate", p.controller.clear_raw_gate);
    integer("pixel_stop", p.controller.pixel_stop);
    integer("pixel_search", p.controller.pixel_search);
    num("range_max", p.controller.range_max);
    num("body_radius", p.body.body_radius);
    num("wheel_radius", p.body.wheel_radius);
    num("axle_track", p.body.axle_track);
    num("sonar_max_range", p.sonar.max_range);
    num("sonar_incidence_cutoff", p.sonar.incidence_cutoff);
    integer("camera_width", p.camera.width);
    integer("camera_height", p.camera.height);
    num("camera_hfov", p.camera.hfov);
    num("camera_mount_offset", p.camera.mount_offset);
    num("intruder_radius", p.visual.intruder_radius);
    num("intruder_height", p.visual.intruder_height);
    num("robot_height", p.visual.robot_height);
    num("obstacle_height", p.visual.obstacle_height);
    p.camera.max_depth = p.controller.range_max;
}

ordered_json params_json(const ScenarioParams& p) {
    ordered_json j;
    j["max_wheel_speed"] = p.controller.max_wheel_speed;
    j["base_fraction"] = p.controller.base_fraction;
    j["steer_delta"] = p.controller.steer_delta;
    j["band"] = p.controller.band;
    j["engage_gate"] = p.controller.engage_gate;
    j["clear_raw_gate"] = p.controller.clear_raw_gate;
    j["pixel_stop"] = p.controller.pixel_stop;
    j["pixel_search"] = p.controller.pixel_search;
    j["range_max"] = p.controller.range_max;
    j["body_radius"] = p.body.body_radius;
    j["wheel_radius"] = p.body.wheel_radius;
    j["axle_track"] = p.body.axle_track;
    j["sonar_max_range"] = p.sonar.max_range;
    j["sonar_incidence_cutoff"] = p.sonar.incidence_cutoff;
    j["camera_width"] = p.camera.width;
    j["camera_height"] = p.camera.height;
    j["camera_hfov"] = p.camera.hfov;
    j["camera_mount_offset"] = p.camera.mount_offset;
    j["intruder_radius"] = p.visual.intruder_radius;
    j["intruder_height"] = p.visual.intruder_height;
    j["robot_height"] = p.visual.robot_height;
    j["obstacle_height"] = p.visual.obstacle_height;
    return j;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioError("scenario: top level must be an object");

    Scenario s;
    const auto& world = get_field(j, "world", "world");
    const auto& bounds = get_field(world, "bounds", "world.bounds");
    s.bounds.min = get_vec2(get_field(bounds, "min", "world.bounds.min"), "world.bounds.min");
    s.bounds.max = get_vec2(get_field(bounds, "max", "world.bounds.max"), "world.bounds.max");

    if (auto it = j.find("obstacles"); it != j.end()) {
        if (!it->is_array()) fail("obstacles", "expected an array");
        for (size_t i = 0; i < it->size(); ++i) {
            const auto& jo = (*it)[i];
            std::string where = "obstacles[" + std::to_string(i) + "]";
            Obstacle ob;
            std::string kind = get_field(jo, "kind", where).get<std::string>();
            ob.center = get_vec2(get_field(jo, "center", where), where + ".center");
            if (kind == "box") {
                ob.kind = ObstacleKind::Box;
                Vec2 size = get_vec2(get_field(jo, "size", where), where + ".size");
                ob.half_extents = {size.x / 2.0, size.y / 2.0};
            } else if (kind == "circle") {
                ob.kind = ObstacleKind::Circle;
                ob.radius = get_num(get_field(jo, "radius", where), where + ".radius");
            } else {
                fail(where + ".kind", "expected 'box' or 'circle'");
            }
            s.obstacles.push_back(ob);
        }
    }

    const auto& robots = get_field(j, "robots", "robots");
    if (!robots.is_array()) fail("robots", "expected an array");
    for (size_t i = 0; i < robots.size(); ++i) {
        const auto& jr = robots[i];
        std::string where = "robots[" + std::to_string(i) + "]";
        RobotSpec r;
        const auto& id = get_field(jr, "id", where);
        if (!id.is_number_integer()) fail(where + ".id", "expected an integer");
        r.id = id.get<int>();
        r.pose.p.x = get_num(get_field(jr, "x", where), where + ".x");
        r.pose.p.y = get_num(get_field(jr, "y", where), where + ".y");
        r.pose.heading = norm_angle(get_num(get_field(jr, "heading", where), where + ".heading"));
        s.robots.push_back(r);
    }

    if (auto it = j.find("intruders"); it != j.end()) {
        if (!it->is_array()) fail("intruders", "expected an array");
        for (size_t i = 0; i < it->size(); ++i) {
            const auto& ji = (*it)[i];
            std::string where = "intruders[" + std::to_string(i) + "]";
            Intruder in;
            std::string color = get_field(ji, "color", where).get<std::string>();
            auto c = intruder_color_from_string(color);
            if (!c) fail(where + ".color", "expected 'blue' or 'green'");
            in.color = *c;
            const auto& wps = get_field(ji, "waypoints", where);
            if (!wps.is_array()) fail(where + ".waypoints", "expected an array");
            for (size_t k = 0; k < wps.size(); ++k) {
                const auto& jw = wps[k];
                std::string wpw = where + ".waypoints[" + std::to_string(k) + "]";
                if (!jw.is_array() || jw.size() != 3) fail(wpw, "expected [t, x, y]");
                Waypoint wp;
                wp.t = get_num(jw[0], wpw + "[0]");
                wp.p = {get_num(jw[1], wpw + "[1]"), get_num(jw[2], wpw + "[2]")};
                in.waypoints.push_back(wp);
            }
            s.intruders.push_back(in);
        }
    }

    s.duration_s = get_num(get_field(j, "duration_s", "duration_s"), "duration_s");
    if (auto it = j.find("params"); it != j.end()) {
        if (!it->is_object()) fail("params", "expected an object");
        read_params(*it, s.params);
    } else {
        s.params.camera.max_depth = s.params.controller.range_max;
    }

    validate_scenario(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ScenarioError("cannot open scenario file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json j;
    j["world"]["bounds"]["min"] = {s.bounds.min.x, s.bounds.min.y};
    j["world"]["bounds"]["max"] = {s.bounds.max.x, s.bounds.max.y};
    j["obstacles"] = ordered_json::array();
    for (const Obstacle& ob : s.obstacles) {
        ordered_json jo;
        if (ob.kind == ObstacleKind::Box) {
            jo["kind"] = "box";
            jo["center"] = {ob.center.x, ob.center.y};
            jo["size"] = {ob.half_extents.x * 2.0, ob.half_extents.y * 2.0};
        } else {
            jo["kind"] = "circle";
            jo["center"] = {ob.center.x, ob.center.y};
            jo["radius"] = ob.radius;
        }
        j["obstacles"].push_back(jo);
    }
    j["robots"] = ordered_json::array();
    for (const RobotSpec& r : s.robots) {
        j["robots"].push_back({{"id", r.id}, {"x", r.pose.p.x}, {"y", r.pose.p.y},
                               {"heading", r.pose.heading}});
    }
    j["intruders"] = ordered_json::array();
    for (const Intruder& in : s.intruders) {
        ordered_json ji;
        ji["color"] = to_string(in.color);
        ji["waypoints"] = ordered_json::array();
        for (const Waypoint& w : in.waypoints) ji["waypoints"].push_back({w.t, w.p.x, w.p.y});
        j["intruders"].push_back(ji);
    }
    j["duration_s"] = s.duration_s;
    j["params"] = params_json(s.params);
    return j.dump(2) + "\n";
}

void validate_scenario(const Scenario& s) {
    auto check = [](bool ok, const std::string& constraint) {
        if (!ok) throw ScenarioError("scenario constraint violated: " + constraint);
    };

    check(s.bounds.min.x < s.bounds.max.x && s.bounds.min.y < s.bounds.max.y,
          "world bounds must satisfy min < max");
    check(s.duration_s >= 0.0, "duration_s must be >= 0");
    check(!s.robots.empty(), "at least one robot is required");

    for (size_t i = 0; i < s.obstacles.size(); ++i) {
        const Obstacle& ob = s.obstacles[i];
        if (ob.kind == ObstacleKind::Box)
            check(ob.half_extents.x > 0.0 && ob.half_extents.y > 0.0,
                  "obstacle box size must be positive");
        else
            check(ob.radius > 0.0, "obstacle circle radius must be positive");
    }

    for (size_t i = 0; i < s.robots.size(); ++i)
        for (size_t k = i + 1; k < s.robots.size(); ++k)
            check(s.robots[i].id != s.robots[k].id, "robot ids must be unique");

    for (size_t i = 0; i < s.intruders.size(); ++i) {
        const Intruder& in = s.intruders[i];
        check(!in.waypoints.empty(), "intruder needs at least one waypoint");
        check(in.waypoints.front().t == 0.0, "intruder waypoint times must start at 0");
        for (size_t k = 1; k < in.waypoints.size(); ++k)
            check(in.waypoints[k].t > in.waypoints[k - 1].t,
                  "intruder waypoint times must be strictly increasing");
        for (size_t k = i + 1; k < s.intruders.size(); ++k)
            check(in.color != s.intruders[k].color, "intruder colors must be unique");
    }

    const ControllerParams& c = s.params.controller;
    check(c.max_wheel_speed > 0.0, "max_wheel_speed must be positive");
    check(c.base_fraction > 0.0 && c.base_fraction <= 1.0, "base_fraction must be in (0, 1]");
    check(c.steer_delta >= 0.0, "steer_delta must be >= 0");
    check(c.steer_delta <= c.base_fraction * c.max_wheel_speed,
          "steer_delta must not exceed the base speed");
    check(c.base_fraction * c.max_wheel_speed + c.steer_delta <= c.max_wheel_speed,
          "base speed plus steer_delta must not exceed max_wheel_speed");
    check(c.band >= 0.0, "band must be >= 0");
    check(c.engage_gate > 0.0, "engage_gate must be positive");
    check(c.clear_raw_gate > 0 && c.clear_raw_gate <= 1024, "clear_raw_gate must be in (0, 1024]");
    check(c.pixel_search >= 0 && c.pixel_stop > c.pixel_search,
          "pixel_stop must exceed pixel_search");
    check(c.range_max > 0.0, "range_max must be positive");

    const BodyGeometry& b = s.params.body;
    check(b.body_radius > 0.0 && b.wheel_radius > 0.0 && b.axle_track > 0.0,
          "body geometry must be positive");

    check(s.params.sonar.max_range > 0.0, "sonar_max_range must be positive");
    check(s.params.sonar.incidence_cutoff >= 0.0 && s.params.sonar.incidence_cutoff <= kPi / 2.0,
          "sonar_incidence_cutoff must be in [0, pi/2]");

    const CameraParams& cam = s.params.camera;
    check(cam.width > 0 && cam.width % 2 == 0, "camera_width must be positive and even");
    check(cam.height > 0, "camera_height must be positive");
    check(cam.hfov > 0.0 && cam.hfov < kPi, "camera_hfov must be in (0, pi)");
    check(s.params.visual.intruder_radius > 0.0 && s.params.visual.intruder_height > 0.0,
          "intruder visual size must be positive");

    // navigable gaps: facing obstacles either touch or leave room for a robot
    const double min_gap = 2.0 * (b.body_radius + 0.2);
    for (size_t i = 0; i < s.obstacles.size(); ++i)
        for (size_t k = i + 1; k < s.obstacles.size(); ++k) {
            double g = obstacle_gap(s.obstacles[i], s.obstacles[k]);
            check(g <= 0.0 || g >= min_gap,
                  "gap between facing obstacles must be zero or at least twice "
                  "(body_radius + 0.2)");
        }

    // initial placement: inside bounds, off obstacles, no body overlap
    WorldGeometry geom({s.bounds.min, s.bounds.max}, s.obstacles);
    std::vector<CircleBody> bodies;
    std::vector<std::string> names;
    for (const RobotSpec& r : s.robots) {
        bodies.push_back({r.pose.p, b.body_radius});
        names.push_back("robot " + std::to_string(r.id));
    }
    for (const Intruder& in : s.intruders) {
        bodies.push_back({in.waypoints.front().p, b.body_radius});
        names.push_back(std::string("intruder ") + to_string(in.color));
    }
    for (size_t i = 0; i < bodies.size(); ++i) {
        const Vec2 p = bodies[i].center;
        check(p.x - b.body_radius > s.bounds.min.x && p.x + b.body_radius < s.bounds.max.x &&
                  p.y - b.body_radius > s.bounds.min.y && p.y + b.body_radius < s.bounds.max.y,
              names[i] + " must start inside the world bounds");
        check(geom.clearance(p, b.body_radius) > 0.0,
              names[i] + " must not start inside an obstacle");
        for (size_t k = i + 1; k < bodies.size(); ++k)
            check((p - bodies[k].center).norm() > bodies[i].radius + bodies[k].radius,
                  names[i] + " and " + names[k] + " must not overlap at start");
    }
}

}  // namespace patrolsim

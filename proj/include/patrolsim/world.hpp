#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "patrolsim/geometry.hpp"
#include "patrolsim/params.hpp"

namespace patrolsim {

// parse or constraint failure in a scenario file
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ObstacleKind { Box, Circle };

struct Obstacle {
    ObstacleKind kind = ObstacleKind::Box;
    Vec2 center;
    Vec2 half_extents;    // Box
    double radius = 0.0;  // Circle
};

enum class IntruderColor { Blue, Green };

const char* to_string(IntruderColor c);
std::optional<IntruderColor> intruder_color_from_string(const std::string& s);

struct Waypoint {
    double t = 0.0;
    Vec2 p;
};

struct Intruder {
    IntruderColor color = IntruderColor::Blue;
    std::vector<Waypoint> waypoints;
};

struct RobotSpec {
    int id = 0;
    Pose pose;
};

struct Scenario {
    Rect bounds;
    std::vector<Obstacle> obstacles;
    std::vector<RobotSpec> robots;
    std::vector<Intruder> intruders;
    double duration_s = 0.0;
    ScenarioParams params;
};

struct RayHit {
    double distance = 0.0;
    double incidence = 0.0;  // angle to the surface normal, [0, pi/2]
};

struct CircleBody {
    Vec2 center;
    double radius = 0.0;
};

// Static geometry: scenario obstacles plus four wall slabs derived from the bounds.
class WorldGeometry {
public:
    WorldGeometry() = default;
    WorldGeometry(const Rect& bounds, std::span<const Obstacle> obstacles);

    // nearest surface along origin+t*dir within max_range; bodies are extra circles,
    // skip_body excludes the caster's own circle
    std::optional<RayHit> ray_cast(Vec2 origin, Vec2 dir, double max_range,
                                   std::span<const CircleBody> bodies = {},
                                   int skip_body = -1) const;

    // min over all surfaces of (distance to surface - body_radius); a body fully in
    // the open returns the sentinel max double when there is nothing to measure
    double clearance(Vec2 p, double body_radius, std::span<const CircleBody> bodies = {},
                     int skip_body = -1) const;

    std::span<const Obstacle> solids() const { return solids_; }

private:
    std::vector<Obstacle> solids_;  // obstacles + wall slabs
};

// nearest front intersection of a ray with one circle, for callers that need to
// know which surface was hit (the renderer); absent when the ray misses
std::optional<double> ray_circle_hit(Vec2 origin, Vec2 dir, Vec2 center, double radius);

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& s);
void validate_scenario(const Scenario& s);  // throws ScenarioError naming the constraint

}  // namespace patrolsim

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "patrolsim/sonar.hpp"

using namespace patrolsim;

namespace {

Obstacle box(Vec2 center, Vec2 half) {
    Obstacle ob;
    ob.kind = ObstacleKind::Box;
    ob.center = center;
    ob.half_extents = half;
    return ob;
}

WorldGeometry open_world(std::span<const Obstacle> obstacles = {}) {
    return WorldGeometry(Rect{{-1e6, -1e6}, {1e6, 1e6}}, obstacles);
}

}  // namespace

TEST_CASE("raw and distance conversions pin the scale ends") {
    CHECK(raw_to_distance(1024) == doctest::Approx(0.0));
    CHECK(raw_to_distance(0) == doctest::Approx(5.0));
    CHECK(raw_to_distance(512) == doctest::Approx(2.5));
    CHECK(raw_to_distance(384) == doctest::Approx(3.125));
    CHECK(raw_to_distance(716.8) == doctest::Approx(1.5));

    CHECK(distance_to_raw(0.0) == 1024);
    CHECK(distance_to_raw(2.5) == 512);
    // rounded raw of 0 is remapped to 1 so 0 stays "no return"
    CHECK(distance_to_raw(4.999) == 1);
    CHECK(distance_to_raw(5.0) == 1);
}

TEST_CASE("conversions reject out-of-domain values") {
    CHECK_THROWS_AS(distance_to_raw(-0.001), std::invalid_argument);
    CHECK_THROWS_AS(distance_to_raw(5.001), std::invalid_argument);
    CHECK_THROWS_AS(raw_to_distance(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(raw_to_distance(1025.0), std::invalid_argument);
}

TEST_CASE("round trip through the raw scale stays within one quantum") {
    const double quantum = 5.0 / 1024.0;
    for (int i = 0; i <= 10000; ++i) {
        double d = 4.99 * i / 10000.0;
        int raw = distance_to_raw(d);
        CHECK(std::abs(raw_to_distance(raw) - d) <= quantum / 2.0 + quantum + 1e-12);
    }
}

TEST_CASE("raw_to_distance is strictly decreasing") {
    for (int raw = 1; raw <= 1024; ++raw)
        CHECK(raw_to_distance(raw) < raw_to_distance(raw - 1));
}

TEST_CASE("a perpendicular wall answers on the beam that faces it") {
    // heading -10 degrees turns the +10 beam onto the +x axis; wall face at x = 2.5
    std::vector<Obstacle> obs{box({3.5, 0.0}, {1.0, 50.0})};
    WorldGeometry w = open_world(obs);
    SonarLayout layout;
    Pose pose{{0.0, 0.0}, -10.0 * kPi / 180.0};
    SonarScan s = scan(w, pose, layout);

    CHECK(s.raws[3] == 512);  // the +10 beam, head on at 2.5 m
    // the -10 beam meets the same face at 20 degrees: still within the cutoff
    CHECK(s.raws[4] == distance_to_raw(2.5 / std::cos(20.0 * kPi / 180.0)));
    // the +-90 beams run parallel to the face and never reach it
    CHECK(s.raws[0] == 0);
    CHECK(s.raws[7] == 0);
}

TEST_CASE("echoes past the incidence cutoff are dropped") {
    // heading -50 degrees puts the +50 beam head on and the -50 beam at 100
    // degrees of swing; the +90 beam then meets the face at 40, the -10 at 60
    std::vector<Obstacle> obs{box({3.5, 0.0}, {1.0, 50.0})};
    WorldGeometry w = open_world(obs);
    SonarLayout layout;
    Pose pose{{0.0, 0.0}, -50.0 * kPi / 180.0};
    SonarScan s = scan(w, pose, layout);

    CHECK(s.raws[1] == 512);                  // +50 beam, head on
    CHECK(s.raws[0] != 0);                    // +90 beam, 40 degrees: inside cutoff
    CHECK(s.raws[4] == 0);                    // -10 beam, 60 degrees: dropped
    double d40 = 2.5 / std::cos(40.0 * kPi / 180.0);
    CHECK(s.raws[0] == distance_to_raw(d40));
}

TEST_CASE("empty surroundings produce all zeros") {
    WorldGeometry w = open_world();
    SonarScan s = scan(w, Pose{{0.0, 0.0}, 0.3}, SonarLayout{});
    for (int r : s.raws) CHECK(r == 0);
}

TEST_CASE("a body dead ahead slips between the +-10 degree beams") {
    // a 0.22 m circle at 2 m subtends about 6.3 degrees: every beam misses
    WorldGeometry w = open_world();
    std::vector<CircleBody> bodies{{{2.0, 0.0}, 0.22}};
    SonarScan s = scan(w, Pose{{0.0, 0.0}, 0.0}, SonarLayout{}, bodies);
    for (int r : s.raws) CHECK(r == 0);
}

TEST_CASE("a body centered on a beam answers on that beam only") {
    WorldGeometry w = open_world();
    Vec2 c = unit_from_angle(10.0 * kPi / 180.0) * 2.0;
    std::vector<CircleBody> bodies{{c, 0.22}};
    SonarScan s = scan(w, Pose{{0.0, 0.0}, 0.0}, SonarLayout{}, bodies);
    CHECK(s.raws[3] == distance_to_raw(2.0 - 0.22));
    for (int i = 0; i < 8; ++i)
        if (i != 3) CHECK(s.raws[i] == 0);

    SonarScan skipped = scan(w, Pose{{0.0, 0.0}, 0.0}, SonarLayout{}, bodies, 0);
    for (int r : skipped.raws) CHECK(r == 0);
}

TEST_CASE("any nonzero raw is consistent with a ray hit on that bearing") {
    std::vector<Obstacle> obs{box({3.0, 1.0}, {0.6, 0.6}), box({-2.0, -2.5}, {1.0, 0.4})};
    WorldGeometry w = open_world(obs);
    SonarLayout layout;
    for (double heading : {0.0, 0.7, -1.3, 2.9}) {
        Pose pose{{0.0, 0.0}, heading};
        SonarScan s = scan(w, pose, layout);
        for (int i = 0; i < 8; ++i) {
            Vec2 dir = unit_from_angle(heading + layout.bearings[i]);
            auto hit = w.ray_cast(pose.p, dir, layout.max_range);
            if (s.raws[i] != 0) {
                REQUIRE(hit.has_value());
                CHECK(hit->incidence <= layout.incidence_cutoff + 1e-12);
                CHECK(s.raws[i] == distance_to_raw(hit->distance));
            } else {
                CHECK((!hit || hit->incidence > layout.incidence_cutoff));
            }
        }
    }
}

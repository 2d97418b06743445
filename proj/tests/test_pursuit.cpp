#include <algorithm>
#include <random>

#include "doctest.h"
#include "patrolsim/pursuit.hpp"

using namespace patrolsim;

namespace {

SegmentationResult seg_of(double blue_min, double green_min, long bl = 10, long br = 10,
                          long gl = 10, long gr = 10) {
    SegmentationResult s;
    s.blue.min_range = blue_min;
    s.blue.left = bl;
    s.blue.right = br;
    s.green.min_range = green_min;
    s.green.left = gl;
    s.green.right = gr;
    return s;
}

}  // namespace

TEST_CASE("the nearer color wins, logged patrol snapshots") {
    // four simultaneous range pairs from one patrol, then four from another
    struct Row {
        double blue, green;
        TargetColor want;
    };
    const Row rows[] = {
        {6.05, 6.55, TargetColor::Blue},  {6.06, 5.37, TargetColor::Green},
        {6.28, 5.27, TargetColor::Green}, {8.52, 5.51, TargetColor::Green},
        {6.35, 5.05, TargetColor::Green}, {5.09, 5.05, TargetColor::Green},
        {4.99, 5.44, TargetColor::Blue},  {5.25, 7.29, TargetColor::Blue},
    };
    for (const Row& r : rows) {
        TargetChoice c = select_target(seg_of(r.blue, r.green), 10.0);
        CHECK(c.color == r.want);
        CHECK(c.chosen_range == (r.want == TargetColor::Blue ? r.blue : r.green));
    }
}

TEST_CASE("select_target edge rules") {
    // both channels silent at the ceiling: no target, counts zeroed
    TargetChoice none = select_target(seg_of(10.0, 10.0, 5, 5, 5, 5), 10.0);
    CHECK(none.color == TargetColor::NoTarget);
    CHECK(none.chosen_range == 10.0);
    CHECK(none.left_pixels == 0);
    CHECK(none.right_pixels == 0);

    // exact tie below the ceiling goes to blue
    TargetChoice tie = select_target(seg_of(4.0, 4.0, 1, 2, 3, 4), 10.0);
    CHECK(tie.color == TargetColor::Blue);
    CHECK(tie.left_pixels == 1);
    CHECK(tie.right_pixels == 2);
}

TEST_CASE("pixel balance steers toward the heavier half") {
    ControllerParams p;

    // more pixels on the left: slow the left wheel to turn left
    PursuitDecision d = pursuit_command(seg_of(3.0, 10.0, 400, 300), p);
    CHECK(d.mode == Mode::Follow);
    CHECK(d.choice.color == TargetColor::Blue);
    CHECK(d.command.left == doctest::Approx(2.12));
    CHECK(d.command.right == doctest::Approx(3.12));

    PursuitDecision m = pursuit_command(seg_of(3.0, 10.0, 300, 400), p);
    CHECK(m.command.left == doctest::Approx(3.12));
    CHECK(m.command.right == doctest::Approx(2.12));

    PursuitDecision even = pursuit_command(seg_of(3.0, 10.0, 350, 350), p);
    CHECK(even.command.left == doctest::Approx(2.62));
    CHECK(even.command.right == doctest::Approx(2.62));
}

TEST_CASE("too few pixels spins in place, too many stops") {
    ControllerParams p;

    PursuitDecision spin = pursuit_command(seg_of(8.0, 10.0, 3, 2), p);
    CHECK(spin.total_pixels == 5);
    CHECK(spin.mode == Mode::SearchSpin);
    CHECK(spin.command.left == 0.0);
    CHECK(spin.command.right == doctest::Approx(2.62));

    PursuitDecision stop = pursuit_command(seg_of(1.7, 10.0, 1600, 1600), p);
    CHECK(stop.total_pixels == 3200);
    CHECK(stop.mode == Mode::Stopped);
    CHECK(stop.command.left == 0.0);
    CHECK(stop.command.right == 0.0);

    // nothing sensed at all behaves like an empty pixel count: hunt
    PursuitDecision hunt = pursuit_command(seg_of(10.0, 10.0, 0, 0, 0, 0), p);
    CHECK(hunt.choice.color == TargetColor::NoTarget);
    CHECK(hunt.mode == Mode::SearchSpin);
}

TEST_CASE("threshold boundaries are exclusive") {
    ControllerParams p;  // pixel_search 10, pixel_stop 3000

    PursuitDecision at_search = pursuit_command(seg_of(5.0, 10.0, 5, 5), p);
    CHECK(at_search.total_pixels == 10);
    CHECK(at_search.mode == Mode::Follow);

    PursuitDecision at_stop = pursuit_command(seg_of(5.0, 10.0, 1500, 1500), p);
    CHECK(at_stop.total_pixels == 3000);
    CHECK(at_stop.mode == Mode::Follow);

    PursuitDecision past_stop = pursuit_command(seg_of(5.0, 10.0, 1500, 1501), p);
    CHECK(past_stop.mode == Mode::Stopped);
}

TEST_CASE("swapping the color channels swaps the selection") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> range(0.5, 9.5);
    std::uniform_int_distribution<long> px(0, 2000);
    for (int trial = 0; trial < 300; ++trial) {
        double rb = range(rng), rg = range(rng);
        if (rb == rg) continue;
        long bl = px(rng), br = px(rng), gl = px(rng), gr = px(rng);
        SegmentationResult fwd = seg_of(rb, rg, bl, br, gl, gr);
        SegmentationResult rev = seg_of(rg, rb, gl, gr, bl, br);

        TargetChoice cf = select_target(fwd, 10.0);
        TargetChoice cr = select_target(rev, 10.0);
        REQUIRE(cf.color != TargetColor::NoTarget);
        CHECK((cf.color == TargetColor::Blue) == (cr.color == TargetColor::Green));
        CHECK(cf.chosen_range == cr.chosen_range);
        CHECK(cf.left_pixels == cr.left_pixels);
        CHECK(cf.right_pixels == cr.right_pixels);

        // chosen range is always the minimum of the two
        CHECK(cf.chosen_range == std::min(rb, rg));
    }
}

TEST_CASE("every decision lands in exactly one mode with its fixed command shape") {
    std::mt19937 rng(4243);
    std::uniform_real_distribution<double> range(0.5, 10.0);
    std::uniform_int_distribution<long> px(0, 1800);
    ControllerParams p;
    for (int trial = 0; trial < 500; ++trial) {
        SegmentationResult s =
            seg_of(range(rng), range(rng), px(rng), px(rng), px(rng), px(rng));
        PursuitDecision d = pursuit_command(s, p);
        long total = d.choice.left_pixels + d.choice.right_pixels;
        CHECK(d.total_pixels == total);
        if (total < p.pixel_search) {
            CHECK(d.mode == Mode::SearchSpin);
            CHECK(d.command == WheelCommand{0.0, p.base_speed()});
        } else if (total > p.pixel_stop) {
            CHECK(d.mode == Mode::Stopped);
            CHECK(d.command == WheelCommand{0.0, 0.0});
        } else {
            CHECK(d.mode == Mode::Follow);
            if (d.choice.left_pixels > d.choice.right_pixels)
                CHECK(d.command.left < d.command.right);
            else if (d.choice.left_pixels < d.choice.right_pixels)
                CHECK(d.command.left > d.command.right);
            else
                CHECK(d.command.left == d.command.right);
        }
    }
}

TEST_CASE("names used in traces") {
    CHECK(std::string(to_string(TargetColor::Blue)) == "blue");
    CHECK(std::string(to_string(TargetColor::Green)) == "green");
    CHECK(std::string(to_string(TargetColor::NoTarget)) == "none");
    CHECK(std::string(to_string(Mode::Nav)) == "nav");
    CHECK(std::string(to_string(Mode::Follow)) == "follow");
    CHECK(std::string(to_string(Mode::SearchSpin)) == "search");
    CHECK(std::string(to_string(Mode::Stopped)) == "stop");
}

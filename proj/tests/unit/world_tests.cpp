#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "trailnav/sim/world.hpp"

using namespace trailnav::sim;
namespace fs = std::filesystem;

namespace {

TrailSegment line(double length) {
  TrailSegment s;
  s.kind = TrailSegment::Kind::Line;
  s.length = length;
  return s;
}

TrailSegment arc(double radius, double length, int turn) {
  TrailSegment s;
  s.kind = TrailSegment::Kind::Arc;
  s.radius = radius;
  s.length = length;
  s.turn = turn;
  return s;
}

}  // namespace

TEST_SUITE("world") {

TEST_CASE("total length is the sum of segment lengths") {
  const TrailWorld w = make_world({line(5.0), arc(6.0, 9.42, +1), line(4.0)}, 1.0);
  CHECK(w.length() == doctest::Approx(18.42));
  CHECK(w.trail_width() == doctest::Approx(1.0));
}

TEST_CASE("centerline is C1-continuous at segment joints") {
  const TrailWorld w = make_world({line(4.0), arc(3.0, 4.0, -1), line(2.0), arc(5.0, 6.0, +1)}, 0.8);
  const double eps = 1e-6;
  double s = 0.0;
  for (const auto& seg : w.segments()) {
    if (s > 0.0) {
      const RobotPose before = w.pose_at(s - eps);
      const RobotPose after = w.pose_at(s + eps);
      CHECK(std::hypot(after.x - before.x, after.y - before.y) < 1e-4);
      CHECK(std::abs(wrap_angle(after.heading - before.heading)) < 1e-4);
    }
    s += seg.length;
  }
}

TEST_CASE("a full-circle arc returns to its start") {
  const double r = 2.0;
  const TrailWorld w = make_world({arc(r, 2 * M_PI * r, +1)}, 0.5);
  const RobotPose start = w.pose_at(0.0);
  const RobotPose end = w.pose_at(w.length());
  CHECK(end.x == doctest::Approx(start.x).epsilon(1e-9).scale(1.0));
  CHECK(end.y == doctest::Approx(start.y).epsilon(1e-9).scale(1.0));
}

TEST_CASE("nearest() inverts pose_at() on the centerline") {
  const TrailWorld w = make_world({line(5.0), arc(4.0, 6.0, +1), line(3.0)}, 1.0);
  for (double s = 0.1; s < w.length(); s += 0.37) {
    const RobotPose p = w.pose_at(s);
    const NearestPoint n = w.nearest(p.x, p.y);
    CHECK(n.distance < 1e-6);
    CHECK(n.arclength == doctest::Approx(s).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("lateral offsets report their unsigned distance") {
  const TrailWorld w = make_world({line(10.0)}, 1.0);
  const RobotPose p = w.pose_at(5.0);
  // straight trail along +x from origin: offset in +y is lateral
  const NearestPoint n = w.nearest(p.x, p.y + 0.3);
  CHECK(n.distance == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(w.on_trail(p.x, p.y + 0.49));
  CHECK_FALSE(w.on_trail(p.x, p.y + 0.51));
}

TEST_CASE("world JSON files load and match their stated geometry") {
  const auto path = fs::temp_directory_path() / "trailnav_world_test.json";
  std::ofstream(path) << R"({
    "trail_width_m": 1.0,
    "segments": [
      {"type": "line", "length_m": 7.0},
      {"type": "arc", "radius_m": 6.0, "length_m": 9.42477796076938, "turn_dir": "left"},
      {"type": "line", "length_m": 6.0},
      {"type": "arc", "radius_m": 5.0, "length_m": 7.853981633974483, "turn_dir": "right"}
    ]})";
  const TrailWorld w = load_world(path);
  CHECK(w.length() == doctest::Approx(30.27875959474386));
  CHECK(w.segments().size() == 4);
  // quarter-circle left then quarter-circle right: heading back to 0
  CHECK(wrap_angle(w.pose_at(w.length()).heading) == doctest::Approx(0.0).epsilon(1e-9).scale(1.0));
}

TEST_CASE("malformed world files are rejected") {
  const auto path = fs::temp_directory_path() / "trailnav_world_bad.json";
  std::ofstream(path) << R"({"trail_width_m": -2, "segments": []})";
  CHECK_THROWS_AS(load_world(path), trailnav::InvalidWorldError);

  const auto path2 = fs::temp_directory_path() / "trailnav_world_bad2.json";
  std::ofstream(path2) << "not json";
  CHECK_THROWS_AS(load_world(path2), trailnav::InvalidWorldError);
}

TEST_CASE("wrap_angle maps into (-pi, pi]") {
  CHECK(wrap_angle(0.0) == doctest::Approx(0.0));
  CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(3 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(7.0) == doctest::Approx(7.0 - 2 * M_PI).epsilon(1e-12));
  CHECK(wrap_angle(-7.0) == doctest::Approx(-7.0 + 2 * M_PI).epsilon(1e-12));
}

}  // TEST_SUITE

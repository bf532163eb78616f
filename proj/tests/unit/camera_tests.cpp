#include <doctest.h>

#include <cmath>

#include "trailnav/midline.hpp"
#include "trailnav/rng.hpp"
#include "trailnav/sim/camera.hpp"
#include "trailnav/sim/world.hpp"

using namespace trailnav;
using namespace trailnav::sim;

namespace {

// Independent ray-to-ground projection via explicit rotation matrices
// (the production path composes the trig inline). Camera looks along +x
// body axis, tilted down by pitch; returns false at/above the horizon.
bool oracle_ground_point(const RobotPose& pose, const CameraModel& cam, int u, int v, double& gx,
                         double& gy) {
  const double f = cam.focal_px();
  const double cx = (cam.image_width - 1) / 2.0;
  const double cy = (cam.image_height - 1) / 2.0;
  // camera frame: +z optical axis, +x image right, +y image down
  const double dx_cam = (u - cx) / f;
  const double dy_cam = (v - cy) / f;

  // rotate optical axis down by pitch around the body's lateral axis:
  // body frame ray (forward, left, up)
  const double cp = std::cos(cam.pitch_rad), sp = std::sin(cam.pitch_rad);
  const double fwd = cp * 1.0 - sp * dy_cam;    // z_cam -> forward, y_cam down
  const double up = -sp * 1.0 - cp * dy_cam;    // negative = below horizontal
  const double left = -dx_cam;                  // image right = body right

  if (up >= -1e-12) return false;  // ray does not descend
  const double t = cam.height_m / -up;

  const double bx = t * fwd;
  const double by = t * left;
  const double ch = std::cos(pose.heading), sh = std::sin(pose.heading);
  gx = pose.x + ch * bx - sh * by;
  gy = pose.y + sh * bx + ch * by;
  return true;
}

MidlineConfig no_downsample() {
  MidlineConfig cfg;
  cfg.downsample_factor = 1;
  return cfg;
}

}  // namespace

TEST_SUITE("camera") {

TEST_CASE("pixel_ground_point agrees with the rotation-matrix oracle") {
  const CameraModel cam;
  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    RobotPose pose;
    pose.x = rng.uniform(-5.0, 5.0);
    pose.y = rng.uniform(-5.0, 5.0);
    pose.heading = rng.uniform(-M_PI, M_PI);
    const int u = static_cast<int>(rng.uniform_index(cam.image_width));
    const int v = static_cast<int>(rng.uniform_index(cam.image_height));

    double gx1 = 0, gy1 = 0, gx2 = 0, gy2 = 0;
    const bool hit1 = pixel_ground_point(pose, cam, u, v, gx1, gy1);
    const bool hit2 = oracle_ground_point(pose, cam, u, v, gx2, gy2);
    CHECK(hit1 == hit2);
    if (hit1 && hit2) {
      CHECK(gx1 == doctest::Approx(gx2).epsilon(1e-9).scale(1.0));
      CHECK(gy1 == doctest::Approx(gy2).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("render matches a per-pixel oracle classification") {
  const TrailWorld world = make_world(
      [] {
        TrailSegment a;
        a.kind = TrailSegment::Kind::Line;
        a.length = 8.0;
        TrailSegment b;
        b.kind = TrailSegment::Kind::Arc;
        b.radius = 4.0;
        b.length = 5.0;
        b.turn = +1;
        return std::vector<TrailSegment>{a, b};
      }(),
      1.0);
  CameraModel cam;
  cam.image_width = 64;
  cam.image_height = 48;

  Rng rng(309);
  int checked = 0, mismatched = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const double s = rng.uniform(0.0, world.length());
    RobotPose pose = world.pose_at(s);
    pose.heading += rng.uniform(-0.3, 0.3);
    const SegMask mask = render_mask(world, pose, cam);

    for (int v = 0; v < cam.image_height; ++v) {
      for (int u = 0; u < cam.image_width; ++u) {
        double gx, gy;
        SegClass expect;
        if (!oracle_ground_point(pose, cam, u, v, gx, gy)) {
          expect = SegClass::Void;
        } else {
          expect = world.on_trail(gx, gy) ? SegClass::Traversable : SegClass::Untraversable;
        }
        ++checked;
        if (mask.at(u, v) != expect) ++mismatched;
      }
    }
  }
  // knife-edge pixels on the trail boundary may legitimately flip
  CHECK(mismatched <= checked / 1000);
}

TEST_CASE("centered on a straight trail the rendered midline is image-centered") {
  const TrailWorld world = make_world(
      [] {
        TrailSegment a;
        a.kind = TrailSegment::Kind::Line;
        a.length = 20.0;
        return std::vector<TrailSegment>{a};
      }(),
      1.0);
  const CameraModel cam;
  const RobotPose pose = world.pose_at(5.0);  // heading along the trail

  const SegMask mask = render_mask(world, pose, cam);
  const MidlineEstimate est = extract_midline(mask, no_downsample());
  REQUIRE(est.valid);
  const double center = (cam.image_width - 1) / 2.0;
  for (const auto& row : est.rows) CHECK(std::abs(row.mid_x - center) <= 1.0);
}

TEST_CASE("a lateral offset shifts the midline by the ray-projected amount") {
  const TrailWorld world = make_world(
      [] {
        TrailSegment a;
        a.kind = TrailSegment::Kind::Line;
        a.length = 20.0;
        return std::vector<TrailSegment>{a};
      }(),
      1.0);
  const CameraModel cam;
  RobotPose pose = world.pose_at(5.0);
  pose.y += 0.2;  // 0.2 m left of the centerline

  const SegMask mask = render_mask(world, pose, cam);
  const MidlineEstimate est = extract_midline(mask, no_downsample());
  REQUIRE(est.valid);

  // oracle: for each accepted image row, scan oracle-projected pixels for
  // the trail edges and compare midpoint columns
  double max_interior_shift = 0.0;
  const double center = (cam.image_width - 1) / 2.0;
  for (const auto& row : est.rows) {
    const int v = cam.image_height - 1 - row.forward;
    int left = -1, right = -1;
    for (int u = 0; u < cam.image_width; ++u) {
      double gx, gy;
      if (!oracle_ground_point(pose, cam, u, v, gx, gy)) continue;
      if (world.on_trail(gx, gy)) {
        if (left < 0) left = u;
        right = u;
      }
    }
    REQUIRE(left >= 0);
    CHECK(std::abs(row.mid_x - (left + right) / 2.0) <= 1.0);

    // Rows where the trail spills past the image borders degenerate to the
    // image center; only rows with both edges interior carry the offset.
    if (left > 0 && right < cam.image_width - 1) {
      CHECK(row.mid_x >= center - 1.0);  // never shifted toward the robot's side
      max_interior_shift = std::max(max_interior_shift, row.mid_x - center);
    }
  }

  // and the shift is to the right of center (robot left of trail)
  CHECK(max_interior_shift > 2.0);
}

TEST_CASE("facing away from the trail produces no traversable ground") {
  const TrailWorld world = make_world(
      [] {
        TrailSegment a;
        a.kind = TrailSegment::Kind::Line;
        a.length = 20.0;
        return std::vector<TrailSegment>{a};
      }(),
      1.0);
  const CameraModel cam;
  RobotPose pose = world.pose_at(10.0);
  pose.y += 3.0;            // well off the trail
  pose.heading += M_PI / 2; // trail behind/to the side of the view

  const SegMask mask = render_mask(world, pose, cam);
  int traversable = 0;
  for (const auto c : mask.data())
    if (c == SegClass::Traversable) ++traversable;
  CHECK(traversable == 0);
}

TEST_CASE("pixels at and above the horizon are void") {
  const TrailWorld world = make_world(
      [] {
        TrailSegment a;
        a.kind = TrailSegment::Kind::Line;
        a.length = 20.0;
        return std::vector<TrailSegment>{a};
      }(),
      1.0);
  CameraModel cam;
  cam.pitch_rad = 0.2;  // shallow tilt keeps the horizon inside the frame
  const SegMask mask = render_mask(world, world.pose_at(5.0), cam);

  bool found_void_row = false;
  for (int v = 0; v < cam.image_height && !found_void_row; ++v) {
    bool all_void = true;
    for (int u = 0; u < cam.image_width; ++u)
      if (mask.at(u, v) != SegClass::Void) all_void = false;
    if (all_void) found_void_row = true;
  }
  CHECK(found_void_row);
}

}  // TEST_SUITE

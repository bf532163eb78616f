#pragma once

#include <filesystem>
#include <vector>

#include "trailnav/errors.hpp"

namespace trailnav::sim {

struct RobotPose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // rad, CCW from +x, wrapped to (-pi, pi]
};

double wrap_angle(double a);

/// One centerline piece. Arcs store the turn direction as +1 (left) or
/// -1 (right); the start pose is precomputed when the world is built so
/// the chain is C1-continuous at the joints.
struct TrailSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  double length = 0.0;  // arclength, m
  double radius = 0.0;  // m, arcs only
  int turn = +1;        // +1 left, -1 right, arcs only

  double start_x = 0.0;
  double start_y = 0.0;
  double start_heading = 0.0;
  double start_s = 0.0;  // cumulative arclength at segment start
};

struct NearestPoint {
  double distance = 0.0;   // unsigned lateral distance to the centerline
  double arclength = 0.0;  // progress along the trail of the closest point
};

/// Synthetic garden trail: a C1 chain of line/arc segments surrounded by
/// grass (Untraversable everywhere off the band).
class TrailWorld {
 public:
  TrailWorld(std::vector<TrailSegment> segments, double trail_width);

  double trail_width() const { return trail_width_; }
  double length() const { return length_; }
  const std::vector<TrailSegment>& segments() const { return segments_; }

  /// Pose of the centerline at arclength s (clamped to [0, length]).
  RobotPose pose_at(double s) const;

  /// Closest centerline point to (x, y) over all segments.
  NearestPoint nearest(double x, double y) const;

  bool on_trail(double x, double y) const {
    return nearest(x, y).distance <= trail_width_ / 2.0;
  }

 private:
  std::vector<TrailSegment> segments_;
  double trail_width_;
  double length_;
};

/// Parse a world JSON file:
///   {"trail_width_m": 1.0,
///    "segments": [{"type": "line", "length_m": 5.0},
///                 {"type": "arc", "radius_m": 6.0, "length_m": 9.4,
///                  "turn_dir": "left"}]}
/// Throws InvalidWorldError.
TrailWorld load_world(const std::filesystem::path& path);

/// Build a world directly from segment specs (used by tests and tools).
TrailWorld make_world(const std::vector<TrailSegment>& prototypes, double trail_width);

}  // namespace trailnav::sim

#include "trailnav/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <utility>

#include <nlohmann/json.hpp>

namespace trailnav::sim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Arc center for a segment starting at (x, y, h). Left turns put the
// center on the left normal, right turns on the right normal.
void arc_center(const TrailSegment& seg, double& cx, double& cy) {
  const double nx = -std::sin(seg.start_heading) * seg.turn;
  const double ny = std::cos(seg.start_heading) * seg.turn;
  cx = seg.start_x + seg.radius * nx;
  cy = seg.start_y + seg.radius * ny;
}

RobotPose pose_on_segment(const TrailSegment& seg, double s) {
  RobotPose p;
  if (seg.kind == TrailSegment::Kind::Line) {
    p.x = seg.start_x + s * std::cos(seg.start_heading);
    p.y = seg.start_y + s * std::sin(seg.start_heading);
    p.heading = seg.start_heading;
    return p;
  }
  double cx = 0.0, cy = 0.0;
  arc_center(seg, cx, cy);
  const double phi = seg.turn * s / seg.radius;
  const double vx = seg.start_x - cx;
  const double vy = seg.start_y - cy;
  p.x = cx + vx * std::cos(phi) - vy * std::sin(phi);
  p.y = cy + vx * std::sin(phi) + vy * std::cos(phi);
  p.heading = wrap_angle(seg.start_heading + phi);
  return p;
}

// Distance from (x, y) to the segment, plus the local arclength of the
// closest point (clamped to the segment extent).
NearestPoint nearest_on_segment(const TrailSegment& seg, double x, double y) {
  NearestPoint out;
  if (seg.kind == TrailSegment::Kind::Line) {
    const double dx = std::cos(seg.start_heading);
    const double dy = std::sin(seg.start_heading);
    double t = (x - seg.start_x) * dx + (y - seg.start_y) * dy;
    t = std::clamp(t, 0.0, seg.length);
    const double px = seg.start_x + t * dx;
    const double py = seg.start_y + t * dy;
    out.distance = std::hypot(x - px, y - py);
    out.arclength = t;
    return out;
  }
  double cx = 0.0, cy = 0.0;
  arc_center(seg, cx, cy);
  const double sweep = seg.length / seg.radius;  // unsigned, rad
  const double theta0 = std::atan2(seg.start_y - cy, seg.start_x - cx);
  const double theta_p = std::atan2(y - cy, x - cx);
  // Signed angle travelled from the arc start to the query direction,
  // folded into [0, 2*pi) along the direction of travel.
  double travelled = seg.turn * (theta_p - theta0);
  travelled = std::fmod(travelled, kTwoPi);
  if (travelled < 0.0) travelled += kTwoPi;
  if (travelled <= sweep) {
    out.distance = std::abs(std::hypot(x - cx, y - cy) - seg.radius);
    out.arclength = travelled * seg.radius;
    return out;
  }
  // Off the swept sector: the closest point is one of the endpoints.
  const RobotPose a = pose_on_segment(seg, 0.0);
  const RobotPose b = pose_on_segment(seg, seg.length);
  const double da = std::hypot(x - a.x, y - a.y);
  const double db = std::hypot(x - b.x, y - b.y);
  if (da <= db) {
    out.distance = da;
    out.arclength = 0.0;
  } else {
    out.distance = db;
    out.arclength = seg.length;
  }
  return out;
}

}  // namespace

double wrap_angle(double a) {
  a = std::fmod(a + kPi, kTwoPi);
  if (a <= 0.0) a += kTwoPi;
  return a - kPi;
}

TrailWorld::TrailWorld(std::vector<TrailSegment> segments, double trail_width)
    : segments_(std::move(segments)), trail_width_(trail_width), length_(0.0) {
  if (segments_.empty()) throw InvalidWorldError("world has no segments");
  if (!(trail_width_ > 0.0)) throw InvalidWorldError("trail width must be positive");
  double x = 0.0, y = 0.0, h = 0.0, s = 0.0;
  for (auto& seg : segments_) {
    if (!(seg.length > 0.0)) throw InvalidWorldError("segment length must be positive");
    if (seg.kind == TrailSegment::Kind::Arc) {
      if (!(seg.radius > 0.0)) throw InvalidWorldError("arc radius must be positive");
      if (seg.turn != 1 && seg.turn != -1) throw InvalidWorldError("arc turn must be left or right");
      if (seg.length > kTwoPi * seg.radius)
        throw InvalidWorldError("arc sweep exceeds a full circle");
    }
    seg.start_x = x;
    seg.start_y = y;
    seg.start_heading = h;
    seg.start_s = s;
    const RobotPose end = pose_on_segment(seg, seg.length);
    x = end.x;
    y = end.y;
    h = end.heading;
    s += seg.length;
  }
  length_ = s;
}

RobotPose TrailWorld::pose_at(double s) const {
  s = std::clamp(s, 0.0, length_);
  // Find the segment containing s (last one owns its end point).
  const TrailSegment* seg = &segments_.back();
  for (const auto& candidate : segments_) {
    if (s <= candidate.start_s + candidate.length) {
      seg = &candidate;
      break;
    }
  }
  return pose_on_segment(*seg, s - seg->start_s);
}

NearestPoint TrailWorld::nearest(double x, double y) const {
  NearestPoint best;
  bool first = true;
  for (const auto& seg : segments_) {
    NearestPoint cand = nearest_on_segment(seg, x, y);
    cand.arclength += seg.start_s;
    if (first || cand.distance < best.distance) {
      best = cand;
      first = false;
    }
  }
  return best;
}

TrailWorld make_world(const std::vector<TrailSegment>& prototypes, double trail_width) {
  return TrailWorld(prototypes, trail_width);
}

TrailWorld load_world(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("no such world file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidWorldError("world file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array())
    throw InvalidWorldError("world file must contain a 'segments' array");
  const double width = doc.value("trail_width_m", 1.0);
  std::vector<TrailSegment> segs;
  for (const auto& item : doc["segments"]) {
    if (!item.is_object() || !item.contains("type"))
      throw InvalidWorldError("segment entries must be objects with a 'type'");
    TrailSegment seg;
    const std::string type = item["type"].get<std::string>();
    if (type == "line") {
      seg.kind = TrailSegment::Kind::Line;
    } else if (type == "arc") {
      seg.kind = TrailSegment::Kind::Arc;
    } else {
      throw InvalidWorldError("unknown segment type: " + type);
    }
    if (!item.contains("length_m") || !item["length_m"].is_number())
      throw InvalidWorldError("segment missing numeric 'length_m'");
    seg.length = item["length_m"].get<double>();
    if (seg.kind == TrailSegment::Kind::Arc) {
      if (!item.contains("radius_m") || !item["radius_m"].is_number())
        throw InvalidWorldError("arc segment missing numeric 'radius_m'");
      seg.radius = item["radius_m"].get<double>();
      const std::string dir = item.value("turn_dir", "left");
      if (dir == "left") {
        seg.turn = +1;
      } else if (dir == "right") {
        seg.turn = -1;
      } else {
        throw InvalidWorldError("arc turn_dir must be 'left' or 'right'");
      }
    }
    segs.push_back(seg);
  }
  return TrailWorld(std::move(segs), width);
}

}  // namespace trailnav::sim

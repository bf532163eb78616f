#include "trailnav/sim/camera.hpp"

#include <cmath>

namespace trailnav::sim {

bool pixel_ground_point(const RobotPose& pose, const CameraModel& cam, int u, int v,
                        double& gx, double& gy) {
  const double f = cam.focal_px();
  const double cx = (cam.image_width - 1) / 2.0;
  const double cy = (cam.image_height - 1) / 2.0;
  const double a = (u - cx) / f;  // right of optical axis, in focal units
  const double b = (v - cy) / f;  // below optical axis

  const double sp = std::sin(cam.pitch_rad);
  const double cp = std::cos(cam.pitch_rad);
  const double sh = std::sin(pose.heading);
  const double ch = std::cos(pose.heading);

  // Camera basis in world coordinates (z up): forward tilted down by
  // pitch, right in the ground plane, down completing the frame.
  const double fwd_x = cp * ch, fwd_y = cp * sh, fwd_z = -sp;
  const double rgt_x = sh, rgt_y = -ch;  // rgt_z = 0
  const double dwn_x = -sp * ch, dwn_y = -sp * sh, dwn_z = -cp;

  const double dir_x = fwd_x + a * rgt_x + b * dwn_x;
  const double dir_y = fwd_y + a * rgt_y + b * dwn_y;
  const double dir_z = fwd_z + b * dwn_z;

  if (dir_z >= -1e-12) return false;  // at or above the horizon
  const double t = cam.height_m / (-dir_z);
  gx = pose.x + t * dir_x;
  gy = pose.y + t * dir_y;
  return true;
}

SegMask render_mask(const TrailWorld& world, const RobotPose& pose, const CameraModel& cam) {
  cam.validate();
  SegMask mask(cam.image_width, cam.image_height, SegClass::Void);
  const double half_width = world.trail_width() / 2.0;
  for (int v = 0; v < cam.image_height; ++v) {
    for (int u = 0; u < cam.image_width; ++u) {
      double gx = 0.0, gy = 0.0;
      if (!pixel_ground_point(pose, cam, u, v, gx, gy)) continue;
      const bool on = world.nearest(gx, gy).distance <= half_width;
      mask.set(u, v, on ? SegClass::Traversable : SegClass::Untraversable);
    }
  }
  return mask;
}

}  // namespace trailnav::sim

#pragma once

#include <cmath>

#include "trailnav/errors.hpp"
#include "trailnav/mask.hpp"
#include "trailnav/sim/world.hpp"

namespace trailnav::sim {

/// Forward-tilted pinhole camera on a flat ground plane. Pitch is the
/// downward tilt below horizontal; the horizontal field of view fixes the
/// focal length, and square pixels are assumed.
struct CameraModel {
  double height_m = 0.26;
  double pitch_rad = 0.35;
  double hfov_rad = 1.2;
  int image_width = 160;
  int image_height = 120;

  void validate() const {
    if (!(height_m > 0.0)) throw DegenerateGeometryError("camera height must be positive");
    if (!(pitch_rad > 0.0) || !(pitch_rad < 1.5707963267948966))
      throw DegenerateGeometryError("camera pitch must lie in (0, pi/2)");
    if (!(hfov_rad > 0.0) || !(hfov_rad < 3.141592653589793))
      throw DegenerateGeometryError("camera hfov must lie in (0, pi)");
    if (image_width < 2 || image_height < 2)
      throw DegenerateGeometryError("camera image must be at least 2x2");
  }

  double focal_px() const { return (image_width / 2.0) / std::tan(hfov_rad / 2.0); }
};

/// Render the ideal segmentation a perfect segmenter would produce from
/// `pose`: Traversable on the trail band, Untraversable on the ground off
/// it, Void at and above the horizon.
SegMask render_mask(const TrailWorld& world, const RobotPose& pose, const CameraModel& cam);

/// Ground intersection of the ray through pixel (u, v). Returns false for
/// rays at or above the horizon; otherwise fills the world-frame hit point.
bool pixel_ground_point(const RobotPose& pose, const CameraModel& cam, int u, int v,
                        double& gx, double& gy);

}  // namespace trailnav::sim

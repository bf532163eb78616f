#pragma once

#include "trailnav/compensator.hpp"
#include "trailnav/mask.hpp"

namespace trailnav {

/// Steering command at one perception tick. Sign convention matches the
/// image: positive yaw_rate turns toward image right (clockwise from
/// above), positive lateral_velocity strafes right. safety_stop zeroes
/// everything.
struct NavCommand {
  double yaw_rate = 0.0;          // rad/s
  double lateral_velocity = 0.0;  // m/s
  double forward_velocity = 0.0;  // m/s, pass-through setpoint
  FrameStamp stamp;
  bool safety_stop = false;
};

struct PlannerConfig {
  double k_yaw = 1.5;             // 1/s, yaw-rate gain on alpha
  double k_lat = 0.5;             // m/s per normalized lateral offset
  double yaw_rate_limit = 1.0;    // rad/s
  double lat_vel_limit = 0.3;     // m/s
  double forward_speed = 0.7;     // m/s
  double rate_hz = 4.0;
  int max_consecutive_rejects = 8;
};

/// Proportional command law on image-space quantities.
///
/// yaw_rate = clamp(k_yaw * alpha). The lateral error is the fitted
/// midline position at the robot's feet (parameter 0) relative to image
/// center, normalized to [-1,1]; lateral_velocity = clamp(k_lat * e).
/// safety_stop engages once consecutive_rejects exceeds the configured
/// maximum and zeroes all velocities. Never throws.
NavCommand make_command(const CompensatedPlan& plan, int mask_width, const PlannerConfig& cfg,
                        const FrameStamp& stamp, int consecutive_rejects);

}  // namespace trailnav

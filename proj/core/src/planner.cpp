#include "trailnav/planner.hpp"

#include <algorithm>

namespace trailnav {

NavCommand make_command(const CompensatedPlan& plan, int mask_width, const PlannerConfig& cfg,
                        const FrameStamp& stamp, int consecutive_rejects) {
  NavCommand cmd;
  cmd.stamp = stamp;

  if (consecutive_rejects > cfg.max_consecutive_rejects) {
    cmd.safety_stop = true;
    return cmd;  // all velocities zero
  }

  cmd.yaw_rate = std::clamp(cfg.k_yaw * plan.alpha, -cfg.yaw_rate_limit, cfg.yaw_rate_limit);

  // lateral offset at the robot's feet, pixel-center image center
  const double center = (mask_width - 1) / 2.0;
  const double half_width = mask_width / 2.0;
  const double e = std::clamp((eval_poly(plan.beta, 0.0) - center) / half_width, -1.0, 1.0);
  cmd.lateral_velocity = std::clamp(cfg.k_lat * e, -cfg.lat_vel_limit, cfg.lat_vel_limit);

  cmd.forward_velocity = cfg.forward_speed;
  return cmd;
}

}  // namespace trailnav

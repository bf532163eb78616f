#include "trailnav/sim/kinematics.hpp"

#include <cmath>

namespace trailnav::sim {

RobotPose step_kinematics(const RobotPose& pose, const NavCommand& cmd, double dt) {
  RobotPose next = pose;
  next.heading = wrap_angle(pose.heading - cmd.yaw_rate * dt);
  const double ch = std::cos(next.heading);
  const double sh = std::sin(next.heading);
  // Body-left is the CCW normal; a positive (rightward) lateral command
  // therefore translates along the negative normal.
  next.x = pose.x + (cmd.forward_velocity * ch + cmd.lateral_velocity * sh) * dt;
  next.y = pose.y + (cmd.forward_velocity * sh - cmd.lateral_velocity * ch) * dt;
  return next;
}

}  // namespace trailnav::sim

#pragma once

#include "trailnav/planner.hpp"
#include "trailnav/sim/world.hpp"

namespace trailnav::sim {

/// Advance the pose by one substep under a body-frame velocity command.
///
/// Commands use the image convention (positive yaw rate and lateral
/// velocity steer toward image right); the world frame is standard CCW,
/// so both are negated here. Heading is rotated first and the translation
/// uses the updated heading, which keeps per-step speed exactly equal to
/// the commanded speed magnitude.
RobotPose step_kinematics(const RobotPose& pose, const NavCommand& cmd, double dt);

}  // namespace trailnav::sim

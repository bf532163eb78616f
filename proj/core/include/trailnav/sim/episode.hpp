#pragma once

#include <cstdint>
#include <vector>

#include "trailnav/logs.hpp"
#include "trailnav/pipeline.hpp"
#include "trailnav/sim/camera.hpp"
#include "trailnav/sim/noise.hpp"
#include "trailnav/sim/world.hpp"

namespace trailnav::sim {

struct EpisodeConfig {
  double duration_s = 0.0;  // 0 = auto from trail length and forward speed
  double substep_s = 0.002;
  double start_lateral_offset_m = 0.0;  // positive = left of the centerline
  double start_heading_offset_rad = 0.0;
  std::uint64_t seed = 0;  // overrides NoiseModel::seed for the run
};

struct RunMetrics {
  bool completed = false;       // reached trail end with zero off-trail events
  double distance_covered = 0.0;
  double max_lateral_dev = 0.0;
  double rms_lateral_dev = 0.0;
  int off_trail_events = 0;  // rising edges of |lateral dev| > trail half-width
  int safety_stops = 0;      // rising edges of the safety-stop flag
  int frames = 0;
  int rejected_frames = 0;
};

struct EpisodeResult {
  RunMetrics metrics;
  std::vector<CommandLogEntry> commands;  // one per perception frame
  std::vector<TraceEntry> trace;          // pose at t=0 and after each frame
  RobotPose final_pose;
};

/// Closed-loop run: render → corrupt → perceive/plan at the planner rate,
/// integrating kinematics in fixed substeps between frames. The episode
/// ends at the trail end or when the duration budget runs out.
EpisodeResult run_episode(const TrailWorld& world, const PipelineConfig& pipeline_cfg,
                          const CameraModel& cam, const NoiseModel& noise,
                          const EpisodeConfig& episode);

}  // namespace trailnav::sim

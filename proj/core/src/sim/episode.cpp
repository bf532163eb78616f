#include "trailnav/sim/episode.hpp"

#include <algorithm>
#include <cmath>

#include "trailnav/sim/kinematics.hpp"

namespace trailnav::sim {

EpisodeResult run_episode(const TrailWorld& world, const PipelineConfig& pipeline_cfg,
                          const CameraModel& cam, const NoiseModel& noise,
                          const EpisodeConfig& episode) {
  cam.validate();
  if (!(episode.substep_s > 0.0)) throw ConfigError("substep_s must be positive");

  NoiseModel seeded_noise = noise;
  seeded_noise.seed = episode.seed;

  RobotPose pose = world.pose_at(0.0);
  pose.x += episode.start_lateral_offset_m * -std::sin(pose.heading);
  pose.y += episode.start_lateral_offset_m * std::cos(pose.heading);
  pose.heading = wrap_angle(pose.heading + episode.start_heading_offset_rad);

  const double rate_hz = pipeline_cfg.planner.rate_hz;
  const double frame_dt = 1.0 / rate_hz;
  const double forward = pipeline_cfg.planner.forward_speed;
  double duration = episode.duration_s;
  if (duration <= 0.0)
    duration = std::max(1.0, world.length() / std::max(forward, 1e-6) * 1.5 + 5.0);

  Pipeline pipeline(pipeline_cfg);
  EpisodeResult result;
  const double half_width = world.trail_width() / 2.0;

  double sum_sq_dev = 0.0;
  std::int64_t dev_samples = 0;
  double max_dev = 0.0;
  double progress = 0.0;
  bool off_trail = false;
  bool stopped = false;
  bool reached_end = false;

  {
    const NearestPoint np = world.nearest(pose.x, pose.y);
    result.trace.push_back({0.0, pose.x, pose.y, pose.heading, np.distance});
  }

  std::uint64_t seq = 0;
  double t = 0.0;
  while (t < duration - 1e-9 && !reached_end) {
    const FrameStamp stamp{seq, t};
    const SegMask ideal = render_mask(world, pose, cam);
    const SegMask observed = inject_noise(ideal, seeded_noise, stamp);
    const PipelineStepResult step = pipeline.step(observed, stamp);

    ++result.metrics.frames;
    if (step.rejected) ++result.metrics.rejected_frames;
    if (step.command.safety_stop && !stopped) ++result.metrics.safety_stops;
    stopped = step.command.safety_stop;

    CommandLogEntry entry;
    entry.seq = seq;
    entry.time_s = t;
    entry.yaw_rate = step.command.yaw_rate;
    entry.lat_vel = step.command.lateral_velocity;
    entry.fwd_vel = step.command.forward_velocity;
    entry.safety_stop = step.command.safety_stop;
    entry.applied_w1 = step.plan ? step.plan->applied_w1 : 0.0;
    entry.alpha = step.plan ? step.plan->alpha : 0.0;
    entry.latency_ms = step.latency_ms;
    result.commands.push_back(entry);

    double remaining = frame_dt;
    double last_dev = 0.0;
    while (remaining > 1e-12 && !reached_end) {
      const double dt = std::min(episode.substep_s, remaining);
      pose = step_kinematics(pose, step.command, dt);
      remaining -= dt;

      const NearestPoint np = world.nearest(pose.x, pose.y);
      last_dev = np.distance;
      sum_sq_dev += np.distance * np.distance;
      ++dev_samples;
      max_dev = std::max(max_dev, np.distance);
      progress = std::max(progress, np.arclength);

      const bool outside = np.distance > half_width;
      if (outside && !off_trail) ++result.metrics.off_trail_events;
      off_trail = outside;

      if (np.arclength >= world.length() - 1e-6) reached_end = true;
    }

    t += frame_dt - remaining;
    ++seq;
    result.trace.push_back({t, pose.x, pose.y, pose.heading, last_dev});
  }

  result.metrics.distance_covered = progress;
  result.metrics.max_lateral_dev = max_dev;
  result.metrics.rms_lateral_dev =
      dev_samples > 0 ? std::sqrt(sum_sq_dev / static_cast<double>(dev_samples)) : 0.0;
  result.metrics.completed = reached_end && result.metrics.off_trail_events == 0;
  result.final_pose = pose;
  return result;
}

}  // namespace trailnav::sim

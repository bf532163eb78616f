#pragma once

#include <optional>

#include "trailnav/compensator.hpp"
#include "trailnav/midline.hpp"
#include "trailnav/planner.hpp"

namespace trailnav {

struct PipelineConfig {
  MidlineConfig midline;
  int fit_degree = 3;
  CompensatorState compensator;  // parameter fields; memory starts empty
  PlannerConfig planner;
};

/// Everything a log line needs about one pipeline step, beyond the
/// command itself.
struct PipelineStepResult {
  NavCommand command;
  std::optional<CompensatedPlan> plan;  // empty before the first valid frame
  MidlineEstimate midline;
  double latency_ms = 0.0;  // wall clock, measured; budget is 250 ms
  bool rejected = false;    // frame contributed no fresh observation
  int consecutive_rejects = 0;
};

/// Single-owner perception→planning pipeline:
/// downsample → extract_midline → compute_yaw → fit_poly →
/// compensator_step → make_command.
///
/// Any upstream failure (invalid midline, underdetermined fit) degrades
/// to a hold or safety-stop command; step never throws on bad masks.
class Pipeline {
 public:
  explicit Pipeline(const PipelineConfig& cfg);

  PipelineStepResult step(const SegMask& mask, const FrameStamp& stamp);

  /// Feed an already-missing frame (unreadable file, dropped image).
  /// Counts as a reject, still emits a command to keep the timeline.
  PipelineStepResult step_absent(const FrameStamp& stamp);

  const PipelineConfig& config() const { return cfg_; }
  const CompensatorState& compensator_state() const { return state_; }
  int consecutive_rejects() const { return consecutive_rejects_; }

 private:
  PipelineStepResult finish(std::optional<PolyCoeffs> beta, std::optional<double> alpha,
                            MidlineEstimate midline, int mask_width, const FrameStamp& stamp,
                            double t_start_ms);

  PipelineConfig cfg_;
  CompensatorState state_;
  int consecutive_rejects_ = 0;
  int last_mask_width_;
};

}  // namespace trailnav

#include "trailnav/pipeline.hpp"

#include <chrono>

namespace trailnav {
namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

Pipeline::Pipeline(const PipelineConfig& cfg)
    : cfg_(cfg),
      state_(cfg.compensator),
      last_mask_width_(std::max(1, 640 / std::max(1, cfg.midline.downsample_factor))) {
  state_.initialized = false;
  state_.prev_beta = PolyCoeffs{};
  state_.prev_alpha = 0.0;
}

PipelineStepResult Pipeline::step(const SegMask& mask, const FrameStamp& stamp) {
  const double t0 = now_ms();

  const SegMask working =
      cfg_.midline.downsample_factor > 1 ? downsample(mask, cfg_.midline.downsample_factor) : mask;
  last_mask_width_ = working.width();

  MidlineEstimate midline = extract_midline(working, cfg_.midline);

  std::optional<PolyCoeffs> beta;
  std::optional<double> alpha;
  if (midline.valid) {
    try {
      alpha = compute_yaw(midline);
      beta = fit_poly(midline, cfg_.fit_degree);
    } catch (const Error&) {
      // degenerate geometry or underdetermined fit: treat as a failed frame
      beta.reset();
      alpha.reset();
    }
  }
  return finish(std::move(beta), std::move(alpha), std::move(midline), working.width(), stamp, t0);
}

PipelineStepResult Pipeline::step_absent(const FrameStamp& stamp) {
  const double t0 = now_ms();
  MidlineEstimate midline;
  return finish(std::nullopt, std::nullopt, std::move(midline), last_mask_width_, stamp, t0);
}

PipelineStepResult Pipeline::finish(std::optional<PolyCoeffs> beta, std::optional<double> alpha,
                                    MidlineEstimate midline, int mask_width,
                                    const FrameStamp& stamp, double t_start_ms) {
  PipelineStepResult result;
  result.midline = std::move(midline);

  StepResult comp = compensator_step(beta, alpha, state_);
  state_ = comp.state;

  const bool fresh = beta.has_value() && alpha.has_value();
  if (fresh) {
    consecutive_rejects_ = 0;
  } else {
    ++consecutive_rejects_;
  }
  result.rejected = !fresh;
  result.consecutive_rejects = consecutive_rejects_;
  result.plan = comp.plan;

  if (comp.plan) {
    result.command =
        make_command(*comp.plan, mask_width, cfg_.planner, stamp, consecutive_rejects_);
  } else {
    // nothing adopted yet: hold still until perception produces a plan
    result.command.stamp = stamp;
    result.command.safety_stop = true;
  }

  result.latency_ms = now_ms() - t_start_ms;
  return result;
}

}  // namespace trailnav

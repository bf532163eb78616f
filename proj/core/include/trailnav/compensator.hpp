#pragma once

#include <optional>

#include "trailnav/pathfit.hpp"

namespace trailnav {

/// Temporal memory plus blend parameters. Base weights say how much a
/// consistent new frame is trusted; the lambdas attenuate that trust
/// exponentially as the new estimate deviates from the previous one;
/// w_min keeps a trickle of fresh data flowing no matter how wild the
/// frame looks.
struct CompensatorState {
  PolyCoeffs prev_beta;
  double prev_alpha = 0.0;

  double base_w1 = 0.6;          // weight of the new coefficient vector
  double base_w_alpha_hat = 0.6; // weight of the new yaw estimate
  double lambda_beta = 0.05;     // per pixel of RMS curve deviation
  double lambda_alpha = 2.0;     // per radian of yaw deviation
  double w_min = 0.05;

  bool initialized = false;
};

/// One compensated output frame. `rejected` marks frames where the new
/// observation was absent and the previous plan was held.
struct CompensatedPlan {
  PolyCoeffs beta;
  double alpha = 0.0;
  double applied_w1 = 0.0;
  double applied_w_alpha_hat = 0.0;
  bool rejected = false;
};

/// RMS distance between the two fitted curves, sampled at 16 evenly
/// spaced parameters in [0,1]. Degrees may differ.
double deviation_metric(const PolyCoeffs& new_beta, const PolyCoeffs& prev_beta);

/// Element-wise convex combination w1*new + (1-w1)*prev; shorter vectors
/// are zero-padded. Throws WeightOutOfRangeError.
PolyCoeffs blend_coeffs(const PolyCoeffs& new_beta, const CompensatorState& state, double w1);

/// Convex combination of yaw angles (both in (-pi/2, pi/2), no wraparound).
/// Throws WeightOutOfRangeError.
double blend_yaw(double new_alpha, const CompensatorState& state, double w_hat);

struct StepResult {
  std::optional<CompensatedPlan> plan;  // empty only before initialization
  CompensatorState state;
};

/// Advance the compensator by one frame.
///
/// First valid frame: adopted wholesale (applied weights report 1).
/// Later valid frames: weights attenuated by exp(-lambda * deviation),
/// floored at w_min, then blended. Absent observation: previous plan is
/// held with rejected=true, or NoPlan (empty optional) when nothing has
/// been adopted yet.
StepResult compensator_step(const std::optional<PolyCoeffs>& new_beta,
                            const std::optional<double>& new_alpha, CompensatorState state);

}  // namespace trailnav

#include "trailnav/compensator.hpp"

#include <algorithm>
#include <cmath>

namespace trailnav {
namespace {

constexpr int kDeviationSamples = 16;

void check_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw WeightOutOfRangeError("blend weight must be in [0,1]");
  }
}

}  // namespace

double deviation_metric(const PolyCoeffs& new_beta, const PolyCoeffs& prev_beta) {
  double sum_sq = 0.0;
  for (int i = 0; i < kDeviationSamples; ++i) {
    const double p = static_cast<double>(i) / (kDeviationSamples - 1);
    const double d = eval_poly(new_beta, p) - eval_poly(prev_beta, p);
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq / kDeviationSamples);
}

PolyCoeffs blend_coeffs(const PolyCoeffs& new_beta, const CompensatorState& state, double w1) {
  check_weight(w1);
  const std::size_t n = std::max(new_beta.beta.size(), state.prev_beta.beta.size());
  PolyCoeffs out;
  out.beta.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double nu = k < new_beta.beta.size() ? new_beta.beta[k] : 0.0;
    const double pr = k < state.prev_beta.beta.size() ? state.prev_beta.beta[k] : 0.0;
    out.beta[k] = w1 * nu + (1.0 - w1) * pr;
  }
  return out;
}

double blend_yaw(double new_alpha, const CompensatorState& state, double w_hat) {
  check_weight(w_hat);
  return w_hat * new_alpha + (1.0 - w_hat) * state.prev_alpha;
}

StepResult compensator_step(const std::optional<PolyCoeffs>& new_beta,
                            const std::optional<double>& new_alpha, CompensatorState state) {
  const bool have_observation = new_beta.has_value() && new_alpha.has_value();

  if (!state.initialized) {
    if (!have_observation) {
      return {std::nullopt, state};  // NoPlan: nothing to hold yet
    }
    state.prev_beta = *new_beta;
    state.prev_alpha = *new_alpha;
    state.initialized = true;
    return {CompensatedPlan{*new_beta, *new_alpha, 1.0, 1.0, false}, state};
  }

  if (!have_observation) {
    // segmentation failure: hold the previous plan
    CompensatedPlan plan{state.prev_beta, state.prev_alpha, state.w_min, state.w_min, true};
    return {plan, state};
  }

  const double dev = deviation_metric(*new_beta, state.prev_beta);
  const double w1 = std::max(state.w_min, state.base_w1 * std::exp(-state.lambda_beta * dev));
  const double w_hat =
      std::max(state.w_min, state.base_w_alpha_hat *
                                std::exp(-state.lambda_alpha * std::abs(*new_alpha - state.prev_alpha)));

  CompensatedPlan plan;
  plan.beta = blend_coeffs(*new_beta, state, w1);
  plan.alpha = blend_yaw(*new_alpha, state, w_hat);
  plan.applied_w1 = w1;
  plan.applied_w_alpha_hat = w_hat;
  plan.rejected = false;

  state.prev_beta = plan.beta;
  state.prev_alpha = plan.alpha;
  return {plan, state};
}

}  // namespace trailnav

#include "trailnav/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace trailnav::evalkit {

namespace {
constexpr double kProbFloor = 1e-12;
constexpr double kSumTolerance = 1e-6;
}  // namespace

ProbMask::ProbMask(int width, int height, int classes, std::vector<double> probs)
    : width_(width), height_(height), classes_(classes), probs_(std::move(probs)) {
  if (width_ < 1 || height_ < 1 || classes_ < 1)
    throw DimensionMismatchError("ProbMask dimensions must be >= 1");
  const std::size_t expected =
      static_cast<std::size_t>(width_) * height_ * static_cast<std::size_t>(classes_);
  if (probs_.size() != expected)
    throw DimensionMismatchError("ProbMask buffer length != width*height*classes");
  for (std::size_t px = 0; px < probs_.size(); px += classes_) {
    double sum = 0.0;
    for (int c = 0; c < classes_; ++c) {
      const double p = probs_[px + c];
      if (!(p >= 0.0))
        throw MalformedImageError("ProbMask probability negative or NaN");
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw MalformedImageError("ProbMask pixel probabilities sum to " + std::to_string(sum));
  }
}

ProbMask ProbMask::from_hard(const SegMask& mask) {
  std::vector<double> probs(
      static_cast<std::size_t>(mask.width()) * mask.height() * kNumClasses, 0.0);
  std::size_t px = 0;
  for (SegClass c : mask.data()) {
    probs[px + static_cast<std::size_t>(c)] = 1.0;
    px += kNumClasses;
  }
  return ProbMask(mask.width(), mask.height(), kNumClasses, std::move(probs));
}

double cross_entropy(const SegMask& gt, const ProbMask& pred) {
  if (gt.width() != pred.width() || gt.height() != pred.height())
    throw DimensionMismatchError("ground truth and prediction dimensions differ");
  if (pred.classes() < kNumClasses)
    throw DimensionMismatchError("prediction has fewer classes than the label set");

  double total = 0.0;
  std::int64_t evaluated = 0;
  for (int y = 0; y < gt.height(); ++y) {
    for (int x = 0; x < gt.width(); ++x) {
      const SegClass truth = gt.at(x, y);
      if (truth == SegClass::Void) continue;
      const double p = std::max(pred.at(x, y, static_cast<int>(truth)), kProbFloor);
      total -= std::log(p);
      ++evaluated;
    }
  }
  if (evaluated == 0) throw NoEvaluablePixelsError("ground truth is entirely Void");
  return total / static_cast<double>(evaluated);
}

EvalReport overlap_metrics(const SegMask& gt, const SegMask& pred_hard) {
  if (gt.width() != pred_hard.width() || gt.height() != pred_hard.height())
    throw DimensionMismatchError("ground truth and prediction dimensions differ");

  std::int64_t intersection[kNumClasses] = {0, 0, 0};
  std::int64_t gt_count[kNumClasses] = {0, 0, 0};
  std::int64_t pred_count[kNumClasses] = {0, 0, 0};
  std::int64_t correct = 0;
  std::int64_t evaluated = 0;

  for (int y = 0; y < gt.height(); ++y) {
    for (int x = 0; x < gt.width(); ++x) {
      const SegClass truth = gt.at(x, y);
      if (truth == SegClass::Void) continue;
      const SegClass guess = pred_hard.at(x, y);
      ++evaluated;
      ++gt_count[static_cast<int>(truth)];
      ++pred_count[static_cast<int>(guess)];
      if (guess == truth) {
        ++correct;
        ++intersection[static_cast<int>(truth)];
      }
    }
  }
  if (evaluated == 0) throw NoEvaluablePixelsError("ground truth is entirely Void");

  EvalReport report;
  report.evaluated_pixels = evaluated;
  report.pixel_accuracy = static_cast<double>(correct) / static_cast<double>(evaluated);
  for (int c = 0; c < kNumClasses; ++c) {
    const std::int64_t uni = gt_count[c] + pred_count[c] - intersection[c];
    if (uni > 0)
      report.per_class_iou[c] = static_cast<double>(intersection[c]) / static_cast<double>(uni);
  }
  return report;
}

}  // namespace trailnav::evalkit

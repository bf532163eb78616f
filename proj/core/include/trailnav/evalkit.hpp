#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "trailnav/errors.hpp"
#include "trailnav/mask.hpp"

namespace trailnav::evalkit {

/// Per-pixel class probability field. Each pixel's probabilities must be
/// non-negative and sum to 1 within 1e-6 (checked at construction).
class ProbMask {
 public:
  ProbMask(int width, int height, int classes, std::vector<double> probs);

  /// One-hot encoding of a hard mask (used when scoring mask-vs-mask).
  static ProbMask from_hard(const SegMask& mask);

  int width() const { return width_; }
  int height() const { return height_; }
  int classes() const { return classes_; }

  double at(int x, int y, int cls) const {
    return probs_[(static_cast<std::size_t>(y) * width_ + x) * classes_ + cls];
  }
  void set(int x, int y, int cls, double p) {
    probs_[(static_cast<std::size_t>(y) * width_ + x) * classes_ + cls] = p;
  }

 private:
  int width_;
  int height_;
  int classes_;
  std::vector<double> probs_;  // row-major, classes fastest
};

struct EvalReport {
  double cross_entropy = 0.0;  // nats per evaluated pixel
  std::array<std::optional<double>, kNumClasses> per_class_iou;  // empty when class absent
  double pixel_accuracy = 0.0;
  std::int64_t evaluated_pixels = 0;  // non-Void ground-truth pixels
};

/// Mean over non-Void ground-truth pixels of -log p(true class), with a
/// 1e-12 probability floor. Throws DimensionMismatchError /
/// NoEvaluablePixelsError.
double cross_entropy(const SegMask& gt, const ProbMask& pred);

/// Per-class intersection-over-union and overall accuracy over non-Void
/// ground-truth pixels. The cross_entropy field is left at 0; callers that
/// also have probabilities fill it via cross_entropy().
EvalReport overlap_metrics(const SegMask& gt, const SegMask& pred_hard);

}  // namespace trailnav::evalkit

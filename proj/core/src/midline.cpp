#include "trailnav/midline.hpp"

#include <cmath>
#include <cstdlib>

namespace trailnav {
namespace {

struct Run {
  int left;
  int right;  // inclusive
  int width() const { return right - left + 1; }
  double center() const { return 0.5 * (left + right); }
};

// Maximal contiguous Traversable runs in one row. Void and Untraversable
// both break a run.
std::vector<Run> scan_runs(const SegMask& mask, int y) {
  std::vector<Run> runs;
  int start = -1;
  for (int x = 0; x < mask.width(); ++x) {
    const bool on = mask.at(x, y) == SegClass::Traversable;
    if (on && start < 0) start = x;
    if (!on && start >= 0) {
      runs.push_back({start, x - 1});
      start = -1;
    }
  }
  if (start >= 0) runs.push_back({start, mask.width() - 1});
  return runs;
}

}  // namespace

MidlineEstimate extract_midline(const SegMask& mask, const MidlineConfig& cfg) {
  MidlineEstimate est;
  est.width = mask.width();
  est.height = mask.height();
  est.start_x = (mask.width() - 1) / 2.0;

  double prev_center = est.start_x;
  for (int y = mask.height() - 1; y >= 0; --y) {
    const std::vector<Run> runs = scan_runs(mask, y);
    const Run* best = nullptr;
    double best_dist = 0.0;
    for (const Run& run : runs) {
      if (run.width() < cfg.min_run_width) continue;
      const double dist = std::abs(run.center() - prev_center);
      // continuity first, then width, then leftmost
      const bool wins = !best || dist < best_dist ||
                        (dist == best_dist && (run.width() > best->width() ||
                                               (run.width() == best->width() &&
                                                run.left < best->left)));
      if (wins) {
        best = &run;
        best_dist = dist;
      }
    }
    if (best) {
      est.rows.push_back({mask.height() - 1 - y, best->center(), best->width()});
      prev_center = best->center();
    }
  }

  est.valid = static_cast<int>(est.rows.size()) >= cfg.min_rows;
  return est;
}

double compute_yaw(const MidlineEstimate& midline) {
  if (!midline.valid) {
    throw InvalidMidlineError("cannot compute yaw from an invalid midline");
  }
  double lateral_sum = 0.0;
  double forward_sum = 0.0;
  for (const MidlineRow& row : midline.rows) {
    lateral_sum += row.mid_x - midline.start_x;
    forward_sum += row.forward;
  }
  if (forward_sum <= 0.0) {
    throw DegenerateGeometryError("forward offset sum is not positive");
  }
  return std::atan(lateral_sum / forward_sum);
}

}  // namespace trailnav

#pragma once

#include <vector>

#include "trailnav/mask.hpp"

namespace trailnav {

struct MidlineConfig {
  int min_run_width = 3;     // downsampled pixels; rejects misclassification speckle
  int min_rows = 5;          // fewer accepted rows than this ⇒ estimate invalid
  int downsample_factor = 8; // applied by the pipeline before extraction
};

/// One accepted image row. `forward` counts rows above the image bottom
/// (bottom row = 0, increasing toward the horizon), so it doubles as the
/// forward-distance parameter of the yaw sum and the fit.
struct MidlineRow {
  int forward = 0;
  double mid_x = 0.0;
  int run_width = 0;
};

/// Per-row trail midpoints. `start_x` is the lateral coordinate of the
/// start point p0, the bottom-center of the image in pixel-center
/// convention ((width-1)/2, so a horizontal mirror maps it to itself).
struct MidlineEstimate {
  std::vector<MidlineRow> rows;  // forward strictly increasing
  double start_x = 0.0;
  int width = 0;
  int height = 0;
  bool valid = false;
};

/// Scan the mask bottom-up and pick one traversable run per row.
///
/// Runs narrower than cfg.min_run_width are ignored. Among the remaining
/// runs of a row the winner is the one whose center is nearest the
/// previously accepted row's center (image center for the first row);
/// ties go to the wider run, then the leftmost. Rows with no eligible run
/// are skipped. Never throws: too few accepted rows is reported through
/// `valid`, since the pipeline has to keep running on bad frames.
MidlineEstimate extract_midline(const SegMask& mask, const MidlineConfig& cfg = {});

/// Heading correction from the midpoint sums:
/// alpha = arctan( sum_i (mid_x_i - start_x) / sum_i forward_i ).
/// Positive alpha means the trail bends toward image right.
///
/// Throws InvalidMidlineError if the estimate is invalid,
/// DegenerateGeometryError if the forward sum is not positive.
double compute_yaw(const MidlineEstimate& midline);

}  // namespace trailnav

#pragma once

#include <cstdint>

#include "trailnav/mask.hpp"

namespace trailnav::sim {

/// Segmentation corruption model. Probabilities are per frame (blob and
/// dropout) or per pixel (flip). Draws are keyed on (seed, frame sequence)
/// so a frame's corruption never depends on evaluation order.
///
/// Blob failures model place-tied mis-segmentation (grass mistaken for
/// trail while the robot passes a confusing patch), so they are coherent
/// in time: frames are grouped into windows of blob_persist_frames, one
/// draw decides whether the whole window is corrupted, and the blob is
/// anchored to a fixed quantile of the off-trail region so it tracks the
/// same piece of scenery for the window. Each frame still has marginal
/// probability blob_failure_prob of carrying a blob. The default blob
/// size is large enough that an uncompensated, unfiltered pipeline
/// visibly loses the trail when bursts hit at blob_failure_prob ≈ 0.2.
struct NoiseModel {
  double blob_failure_prob = 0.0;  // paint a false-positive traversable blob
  double blob_size_px = 16000.0;   // blob area, px at the rendered resolution
  int blob_persist_frames = 8;     // burst length (2 s at 4 Hz)
  double pixel_flip_prob = 0.0;    // independent per-pixel class flips
  double dropout_prob = 0.0;       // whole frame becomes Void
  std::uint64_t seed = 0;
};

/// Apply the model to a rendered mask. The input is untouched; the
/// returned mask has the same dimensions.
SegMask inject_noise(const SegMask& mask, const NoiseModel& model, const FrameStamp& stamp);

}  // namespace trailnav::sim

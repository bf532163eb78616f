#include "trailnav/sim/noise.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "trailnav/rng.hpp"

namespace trailnav::sim {

namespace {

// Counter offset separating the per-window blob stream from the per-frame
// flip/dropout stream (frame sequences stay far below this).
constexpr std::uint64_t kBlobStreamBase = std::uint64_t{1} << 48;

// Paint a disk of roughly `area` pixels of false Traversable into the
// Untraversable region around (cx, cy); trail and sky pixels are left
// alone, so blobs near the trail merge with it instead of covering it.
void paint_blob(SegMask& mask, double area, int cx, int cy) {
  const double radius = std::sqrt(area / std::numbers::pi);
  const int r_ceil = static_cast<int>(std::ceil(radius));
  for (int y = cy - r_ceil; y <= cy + r_ceil; ++y) {
    if (y < 0 || y >= mask.height()) continue;
    for (int x = cx - r_ceil; x <= cx + r_ceil; ++x) {
      if (x < 0 || x >= mask.width()) continue;
      const double dx = x - cx, dy = y - cy;
      if (dx * dx + dy * dy > radius * radius) continue;
      if (mask.at(x, y) == SegClass::Untraversable) mask.set(x, y, SegClass::Traversable);
    }
  }
}

}  // namespace

SegMask inject_noise(const SegMask& mask, const NoiseModel& model, const FrameStamp& stamp) {
  Rng frame_rng(model.seed, stamp.sequence);

  if (model.dropout_prob > 0.0 && frame_rng.bernoulli(model.dropout_prob))
    return SegMask(mask.width(), mask.height(), SegClass::Void);

  SegMask out = mask;
  if (model.blob_failure_prob > 0.0) {
    const std::uint64_t persist =
        model.blob_persist_frames > 0 ? static_cast<std::uint64_t>(model.blob_persist_frames) : 1;
    Rng blob_rng(model.seed, kBlobStreamBase + stamp.sequence / persist);
    if (blob_rng.bernoulli(model.blob_failure_prob)) {
      // The blob is anchored to a fixed quantile of the Untraversable pixel
      // set (row-major order). The quantile is constant for the whole burst
      // window, so the false patch sits over the same part of the scene and
      // tracks it as the camera moves, the way a real mis-segmented grass
      // region would.
      const double quantile = blob_rng.uniform();
      std::size_t count = 0;
      for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x)
          if (out.at(x, y) == SegClass::Untraversable) ++count;
      if (count > 0) {
        auto target = static_cast<std::size_t>(quantile * static_cast<double>(count));
        if (target >= count) target = count - 1;
        std::size_t seen = 0;
        int cx = 0, cy = 0;
        for (int y = 0; y < out.height() && seen <= target; ++y) {
          for (int x = 0; x < out.width(); ++x) {
            if (out.at(x, y) != SegClass::Untraversable) continue;
            if (seen == target) { cx = x; cy = y; }
            if (++seen > target) break;
          }
        }
        paint_blob(out, model.blob_size_px, cx, cy);
      }
    }
  }

  if (model.pixel_flip_prob > 0.0) {
    for (int y = 0; y < out.height(); ++y) {
      for (int x = 0; x < out.width(); ++x) {
        if (!frame_rng.bernoulli(model.pixel_flip_prob)) continue;
        const auto current = static_cast<std::uint8_t>(out.at(x, y));
        const auto shift = 1 + static_cast<std::uint8_t>(frame_rng.uniform_index(2));
        out.set(x, y, static_cast<SegClass>((current + shift) % 3));
      }
    }
  }
  return out;
}

}  // namespace trailnav::sim

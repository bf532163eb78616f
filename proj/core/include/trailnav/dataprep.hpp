#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trailnav/errors.hpp"
#include "trailnav/mask.hpp"
#include "trailnav/rng.hpp"

namespace trailnav::dataprep {

/// Raw source-label image: 8-bit class ids before relabeling.
struct IdGrid {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> ids;  // row-major

  std::uint8_t at(int x, int y) const { return ids[static_cast<std::size_t>(y) * width + x]; }
};

IdGrid load_id_grid(const std::filesystem::path& path);

/// Source class id → 3-class mapping. The default covers ids 0..33:
/// road/sidewalk-like surfaces → Traversable, obstacle-like ids (people,
/// vehicles, structures, vegetation, terrain) → Untraversable, and the
/// remainder (meta ids, sky) → Void.
struct LabelMap {
  std::string name;
  std::map<int, SegClass> mapping;

  SegClass lookup(int id) const {
    const auto it = mapping.find(id);
    if (it == mapping.end())
      throw UnmappedIdError("class id " + std::to_string(id) + " not in label map '" + name + "'");
    return it->second;
  }
};

LabelMap default_label_map();

/// JSON form: {"name": "...", "mapping": {"7": 1, "8": 1, "24": 2}}.
/// Values are the numeric SegClass codes 0/1/2.
LabelMap load_label_map(const std::filesystem::path& path);

/// Pixel-wise lookup; preserves dimensions. Throws UnmappedIdError.
SegMask relabel(const IdGrid& source, const LabelMap& map);

/// Per-item sampling masses; defaults give each garden image twice the
/// mass of each cityscape image.
struct SampleWeights {
  double garden_weight = 2.0;
  double cityscape_weight = 1.0;
};

/// Axis-aligned rectangle of traversable ground, in pixels.
struct BoxLabel {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
};

/// Pixels inside any box → Traversable, everything else → Void (unlabeled,
/// excluded from evaluation). Overlaps label once. Throws BoxOutOfBoundsError.
SegMask boxes_to_mask(const std::vector<BoxLabel>& boxes, int width, int height);

/// What augment() did to one mask; replaying the record on the same input
/// reproduces the output exactly. Pixel intensities are normalized to
/// [0, 1] at training time; masks carry classes, so the record only notes
/// that convention for downstream image pipelines.
struct AugmentRecord {
  bool flip = false;
  double angle_deg = 0.0;
  bool normalized_intensity = true;  // metadata only, no effect on masks
};

/// Horizontal flip with p = 0.5, then rotation by a uniform angle in
/// [-5, +5] degrees, nearest-neighbor resampling, out-of-frame → Void.
std::pair<SegMask, AugmentRecord> augment(const SegMask& mask, Rng& rng);

/// Deterministic replay of a recorded augmentation.
SegMask apply_augment(const SegMask& mask, const AugmentRecord& record);

/// Epoch of with-replacement draws. Garden items occupy indices
/// [0, n_garden), cityscape items [n_garden, n_garden + n_city); each item
/// is selected proportionally to its per-item weight.
std::vector<std::size_t> weighted_indices(std::size_t n_garden, std::size_t n_city,
                                          const SampleWeights& weights, std::size_t epoch_len,
                                          Rng& rng);

}  // namespace trailnav::dataprep

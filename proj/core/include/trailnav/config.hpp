#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "trailnav/errors.hpp"
#include "trailnav/pipeline.hpp"
#include "trailnav/sim/camera.hpp"
#include "trailnav/sim/episode.hpp"
#include "trailnav/sim/noise.hpp"

namespace trailnav {

struct SimConfig {
  double substep_s = 0.002;
  double duration_s = 0.0;  // 0 = auto from trail length
  double camera_height_m = 0.26;
  double camera_pitch_rad = 0.35;
  double camera_hfov_rad = 1.2;
  int image_width = 160;
  int image_height = 120;
  double noise_blob_failure_prob = 0.0;
  double noise_blob_size_px = 16000.0;
  int noise_blob_persist_frames = 8;
  double noise_pixel_flip_prob = 0.0;
  double noise_dropout_prob = 0.0;
  double start_lateral_offset_m = 0.0;
  double start_heading_offset_rad = 0.0;
};

/// Every tunable in one flat, dotted-key namespace. Unknown keys are
/// rejected; the effective configuration is echoed into every artifact.
struct RunConfig {
  MidlineConfig midline;
  int fit_degree = 3;
  bool comp_enabled = true;
  CompensatorState comp;  // only the weight/attenuation fields act as config
  PlannerConfig planner;
  SimConfig sim;
  std::uint64_t seed = 0;

  /// Set one key from its string form. Throws ConfigError for unknown
  /// keys or unparseable values.
  void set(const std::string& key, const std::string& value);

  /// Range/consistency checks across all keys. Throws ConfigError.
  void validate() const;

  /// Canonical (key, value) list covering every key, in declaration order.
  std::vector<std::pair<std::string, std::string>> echo() const;

  PipelineConfig pipeline() const;
  sim::CameraModel camera() const;
  sim::NoiseModel noise() const;
  sim::EpisodeConfig episode() const;
};

/// Load key=value text (# comments allowed) or, for .json files, a JSON
/// object whose nested structure flattens to dotted keys.
RunConfig load_config(const std::filesystem::path& path);

/// Apply only the keys present in the file on top of an existing config
/// (profile defaults survive for keys the file does not mention).
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

/// Apply "key=value" strings (e.g. from --set flags) on top of `cfg`.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& sets);

}  // namespace trailnav

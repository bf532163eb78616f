#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "trailnav/errors.hpp"

namespace trailnav {

/// Per-pixel terrain class. Numeric codes are stable across file I/O:
/// mask files store these raw values, no palette involved.
enum class SegClass : std::uint8_t {
  Void = 0,
  Traversable = 1,
  Untraversable = 2,
};

inline constexpr int kNumClasses = 3;

/// Row-major grid of SegClass values. Immutable by convention once built;
/// operations return new masks.
class SegMask {
 public:
  SegMask(int width, int height, std::vector<SegClass> data);

  /// Constant-fill constructor.
  SegMask(int width, int height, SegClass fill = SegClass::Void);

  int width() const { return width_; }
  int height() const { return height_; }

  SegClass at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  void set(int x, int y, SegClass c) { data_[static_cast<std::size_t>(y) * width_ + x] = c; }

  const std::vector<SegClass>& data() const { return data_; }
  std::vector<SegClass>& data() { return data_; }

  bool operator==(const SegMask& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<SegClass> data_;
};

/// Frame identity within a run: strictly increasing sequence plus seconds
/// since run start.
struct FrameStamp {
  std::uint64_t sequence = 0;
  double time_s = 0.0;
};

/// Load a mask from an 8-bit single-channel PGM (P5) or PNG file. Pixel
/// values must be in {0,1,2}. The format is sniffed from the file magic,
/// not the extension.
///
/// Throws MissingFileError, MalformedImageError, IllegalClassValueError.
SegMask load_mask(const std::filesystem::path& path);

/// Write a mask as PGM or PNG depending on the extension (".png" → PNG,
/// anything else → PGM). Bit-exact inverse of load_mask on the class grid.
///
/// Throws IoError.
void save_mask(const SegMask& mask, const std::filesystem::path& path);

/// Block-majority downsample. Output dims are ceil(dim/factor); each output
/// pixel is the majority class of its factor×factor source block, ties
/// broken by priority Untraversable > Traversable > Void so thin obstacle
/// borders survive.
///
/// Throws ZeroFactorError if factor < 1.
SegMask downsample(const SegMask& mask, int factor);

/// Write an arbitrary 8-bit grayscale image (row-major), same format rules
/// as save_mask. Used for plot emission; values are intensities, not
/// classes.
void save_gray_image(int width, int height, const std::vector<std::uint8_t>& bytes,
                     const std::filesystem::path& path);

}  // namespace trailnav

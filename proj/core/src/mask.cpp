#include "trailnav/mask.hpp"

#include <algorithm>
#include <string>

#include "image_io.hpp"

namespace trailnav {
namespace {

std::vector<SegClass> to_classes(const std::vector<std::uint8_t>& bytes,
                                 const std::filesystem::path& path) {
  std::vector<SegClass> out;
  out.reserve(bytes.size());
  for (std::uint8_t v : bytes) {
    if (v > 2) {
      throw IllegalClassValueError("pixel value " + std::to_string(int(v)) +
                                   " outside {0,1,2} in " + path.string());
    }
    out.push_back(static_cast<SegClass>(v));
  }
  return out;
}

}  // namespace

SegMask::SegMask(int width, int height, std::vector<SegClass> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width_ < 1 || height_ < 1) {
    throw MalformedImageError("mask dimensions must be >= 1");
  }
  if (data_.size() != static_cast<std::size_t>(width_) * height_) {
    throw MalformedImageError("mask data length != width*height");
  }
}

SegMask::SegMask(int width, int height, SegClass fill) : width_(width), height_(height) {
  if (width_ < 1 || height_ < 1) {
    throw MalformedImageError("mask dimensions must be >= 1");
  }
  data_.assign(static_cast<std::size_t>(width_) * height_, fill);
}

SegMask load_mask(const std::filesystem::path& path) {
  const detail::Gray8 img = detail::load_gray8(path);
  return SegMask(img.width, img.height, to_classes(img.bytes, path));
}

void save_mask(const SegMask& mask, const std::filesystem::path& path) {
  detail::Gray8 img{mask.width(), mask.height(), {}};
  img.bytes.reserve(mask.data().size());
  for (SegClass c : mask.data()) img.bytes.push_back(static_cast<std::uint8_t>(c));
  detail::save_gray8(img, path);
}

void save_gray_image(int width, int height, const std::vector<std::uint8_t>& bytes,
                     const std::filesystem::path& path) {
  detail::save_gray8(detail::Gray8{width, height, bytes}, path);
}

SegMask downsample(const SegMask& mask, int factor) {
  if (factor < 1) {
    throw ZeroFactorError("downsample factor must be >= 1");
  }
  if (factor == 1) return mask;

  const int ow = (mask.width() + factor - 1) / factor;
  const int oh = (mask.height() + factor - 1) / factor;
  SegMask out(ow, oh, SegClass::Void);

  for (int oy = 0; oy < oh; ++oy) {
    for (int ox = 0; ox < ow; ++ox) {
      int counts[kNumClasses] = {0, 0, 0};
      const int x0 = ox * factor, y0 = oy * factor;
      const int x1 = std::min(x0 + factor, mask.width());
      const int y1 = std::min(y0 + factor, mask.height());
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          ++counts[static_cast<int>(mask.at(x, y))];
        }
      }
      // tie priority: Untraversable > Traversable > Void
      SegClass best = SegClass::Untraversable;
      int best_count = counts[2];
      if (counts[1] > best_count) {
        best = SegClass::Traversable;
        best_count = counts[1];
      }
      if (counts[0] > best_count) {
        best = SegClass::Void;
      }
      out.set(ox, oy, best);
    }
  }
  return out;
}

}  // namespace trailnav

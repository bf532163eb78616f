#pragma once

// Private 8-bit grayscale image IO shared by the mask and dataprep units.
// Reads binary PGM (P5) and 8-bit single-channel PNG; format is sniffed
// from the file magic, and writes pick the format from the extension.

#include <cstdint>
#include <filesystem>
#include <vector>

namespace trailnav::detail {

struct Gray8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bytes;  // row-major
};

Gray8 load_gray8(const std::filesystem::path& path);
void save_gray8(const Gray8& img, const std::filesystem::path& path);

}  // namespace trailnav::detail

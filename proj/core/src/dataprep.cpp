#include "trailnav/dataprep.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "image_io.hpp"

namespace trailnav::dataprep {

IdGrid load_id_grid(const std::filesystem::path& path) {
  detail::Gray8 img = detail::load_gray8(path);
  return IdGrid{img.width, img.height, std::move(img.bytes)};
}

LabelMap default_label_map() {
  LabelMap map;
  map.name = "cityscapes34-default";
  // Meta ids (unlabeled, ego vehicle, rectification border, out of roi,
  // static, dynamic), rail track, and sky carry no footing information.
  for (int id : {0, 1, 2, 3, 4, 5, 10, 23}) map.mapping[id] = SegClass::Void;
  // Walkable ground surfaces.
  for (int id : {6, 7, 8, 9}) map.mapping[id] = SegClass::Traversable;
  // Structures, poles/signs, vegetation, terrain, people, and vehicles.
  for (int id : {11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22,
                 24, 25, 26, 27, 28, 29, 30, 31, 32, 33})
    map.mapping[id] = SegClass::Untraversable;
  return map;
}

LabelMap load_label_map(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("no such label map file: " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("label map is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("mapping") || !doc["mapping"].is_object())
    throw ConfigError("label map must contain a 'mapping' object");
  LabelMap map;
  map.name = doc.value("name", path.stem().string());
  for (const auto& [key, value] : doc["mapping"].items()) {
    int id = 0;
    try {
      id = std::stoi(key);
    } catch (const std::exception&) {
      throw ConfigError("label map key is not an integer id: " + key);
    }
    if (!value.is_number_integer())
      throw ConfigError("label map value for id " + key + " must be 0, 1, or 2");
    const int cls = value.get<int>();
    if (cls < 0 || cls > 2)
      throw IllegalClassValueError("label map value " + std::to_string(cls) + " outside {0,1,2}");
    map.mapping[id] = static_cast<SegClass>(cls);
  }
  if (map.mapping.empty()) throw ConfigError("label map has an empty mapping");
  return map;
}

SegMask relabel(const IdGrid& source, const LabelMap& map) {
  std::vector<SegClass> out;
  out.reserve(source.ids.size());
  for (std::uint8_t id : source.ids) out.push_back(map.lookup(id));
  return SegMask(source.width, source.height, std::move(out));
}

SegMask boxes_to_mask(const std::vector<BoxLabel>& boxes, int width, int height) {
  SegMask mask(width, height, SegClass::Void);
  for (const auto& box : boxes) {
    if (box.w < 1 || box.h < 1)
      throw BoxOutOfBoundsError("box width/height must be >= 1");
    if (box.x < 0 || box.y < 0 || box.x + box.w > width || box.y + box.h > height)
      throw BoxOutOfBoundsError("box (" + std::to_string(box.x) + "," + std::to_string(box.y) +
                                "," + std::to_string(box.w) + "," + std::to_string(box.h) +
                                ") exceeds " + std::to_string(width) + "x" +
                                std::to_string(height));
    for (int y = box.y; y < box.y + box.h; ++y)
      for (int x = box.x; x < box.x + box.w; ++x) mask.set(x, y, SegClass::Traversable);
  }
  return mask;
}

namespace {

SegMask flip_horizontal(const SegMask& mask) {
  SegMask out(mask.width(), mask.height(), SegClass::Void);
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x) out.set(mask.width() - 1 - x, y, mask.at(x, y));
  return out;
}

// Nearest-neighbor rotation about the pixel-center image midpoint; each
// destination pixel samples the source through the inverse rotation.
SegMask rotate_nearest(const SegMask& mask, double angle_deg) {
  if (angle_deg == 0.0) return mask;
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta), s = std::sin(theta);
  const double cx = (mask.width() - 1) / 2.0;
  const double cy = (mask.height() - 1) / 2.0;
  SegMask out(mask.width(), mask.height(), SegClass::Void);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      const double dx = x - cx, dy = y - cy;
      const long sx = std::lround(cx + c * dx + s * dy);
      const long sy = std::lround(cy - s * dx + c * dy);
      if (sx < 0 || sx >= mask.width() || sy < 0 || sy >= mask.height()) continue;
      out.set(x, y, mask.at(static_cast<int>(sx), static_cast<int>(sy)));
    }
  }
  return out;
}

}  // namespace

SegMask apply_augment(const SegMask& mask, const AugmentRecord& record) {
  SegMask out = record.flip ? flip_horizontal(mask) : mask;
  return rotate_nearest(out, record.angle_deg);
}

std::pair<SegMask, AugmentRecord> augment(const SegMask& mask, Rng& rng) {
  AugmentRecord record;
  record.flip = rng.bernoulli(0.5);
  record.angle_deg = rng.uniform(-5.0, 5.0);
  return {apply_augment(mask, record), record};
}

std::vector<std::size_t> weighted_indices(std::size_t n_garden, std::size_t n_city,
                                          const SampleWeights& weights, std::size_t epoch_len,
                                          Rng& rng) {
  if (!(weights.garden_weight > 0.0) || !(weights.cityscape_weight > 0.0))
    throw WeightOutOfRangeError("sample weights must be positive");
  if (n_garden + n_city == 0) throw EmptyDatasetError("no items to sample from");

  const double garden_mass = weights.garden_weight * static_cast<double>(n_garden);
  const double total_mass = garden_mass + weights.cityscape_weight * static_cast<double>(n_city);
  std::vector<std::size_t> out;
  out.reserve(epoch_len);
  for (std::size_t i = 0; i < epoch_len; ++i) {
    const double u = rng.uniform() * total_mass;
    if (u < garden_mass) {
      out.push_back(rng.uniform_index(n_garden));
    } else {
      out.push_back(n_garden + rng.uniform_index(n_city));
    }
  }
  return out;
}

}  // namespace trailnav::dataprep

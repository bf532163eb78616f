#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "common.hpp"
#include "trailnav/dataprep.hpp"
#include "trailnav/logs.hpp"
#include "trailnav/rng.hpp"

namespace trailnav::cli {

int run_dataprep_relabel(const DataprepRelabelOptions& opt) {
  const dataprep::LabelMap map =
      opt.map_file.empty() ? dataprep::default_label_map() : dataprep::load_label_map(opt.map_file);
  const auto files = collect_image_files(opt.src_dir);
  std::filesystem::create_directories(opt.out_dir);

  for (const auto& file : files) {
    const dataprep::IdGrid grid = dataprep::load_id_grid(file);
    const SegMask mask = dataprep::relabel(grid, map);
    save_mask(mask, opt.out_dir / (file.stem().string() + ".png"));
  }

  nlohmann::json manifest;
  manifest["command"] = "dataprep relabel";
  manifest["label_map"] = map.name;
  manifest["images"] = files.size();
  write_json_file(manifest, opt.out_dir / "manifest.json");
  std::cout << "relabel: " << files.size() << " images with map '" << map.name << "' -> "
            << opt.out_dir.string() << '\n';
  return kExitOk;
}

namespace {

// Rows are `image,x,y,w,h`; a leading header row is skipped.
std::map<std::string, std::vector<dataprep::BoxLabel>> parse_boxes_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("no such box CSV: " + path.string());
  std::map<std::string, std::vector<dataprep::BoxLabel>> by_image;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line.rfind("image,", 0) == 0) continue;
    std::istringstream row(line);
    std::string image, xs, ys, ws, hs;
    if (!std::getline(row, image, ',') || !std::getline(row, xs, ',') ||
        !std::getline(row, ys, ',') || !std::getline(row, ws, ',') || !std::getline(row, hs)) {
      throw MalformedImageError("box CSV line " + std::to_string(lineno) +
                                " is not image,x,y,w,h");
    }
    dataprep::BoxLabel box;
    try {
      box.x = std::stoi(xs);
      box.y = std::stoi(ys);
      box.w = std::stoi(ws);
      box.h = std::stoi(hs);
    } catch (const std::exception&) {
      throw MalformedImageError("box CSV line " + std::to_string(lineno) +
                                " has non-integer coordinates");
    }
    by_image[image].push_back(box);
  }
  if (by_image.empty()) throw EmptyDatasetError("box CSV contains no rows: " + path.string());
  return by_image;
}

}  // namespace

int run_dataprep_boxes(const DataprepBoxesOptions& opt) {
  const auto by_image = parse_boxes_csv(opt.csv_file);
  std::filesystem::create_directories(opt.out_dir);

  std::size_t total_boxes = 0;
  for (const auto& [image, boxes] : by_image) {
    const SegMask mask = dataprep::boxes_to_mask(boxes, opt.width, opt.height);
    const std::filesystem::path stem = std::filesystem::path(image).stem();
    save_mask(mask, opt.out_dir / (stem.string() + ".png"));
    total_boxes += boxes.size();
  }

  nlohmann::json manifest;
  manifest["command"] = "dataprep boxes";
  manifest["images"] = by_image.size();
  manifest["boxes"] = total_boxes;
  manifest["width"] = opt.width;
  manifest["height"] = opt.height;
  write_json_file(manifest, opt.out_dir / "manifest.json");
  std::cout << "boxes: " << total_boxes << " boxes over " << by_image.size() << " images -> "
            << opt.out_dir.string() << '\n';
  return kExitOk;
}

int run_dataprep_augment(const DataprepAugmentOptions& opt) {
  const auto files = collect_image_files(opt.src_dir);
  std::filesystem::create_directories(opt.out_dir);

  nlohmann::json records = nlohmann::json::object();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const SegMask mask = load_mask(files[i]);
    Rng rng(opt.seed, i);
    const auto [augmented, record] = dataprep::augment(mask, rng);
    save_mask(augmented, opt.out_dir / (files[i].stem().string() + ".png"));
    records[files[i].filename().string()] = {{"flip", record.flip},
                                             {"angle_deg", record.angle_deg},
                                             {"normalized_intensity", record.normalized_intensity}};
  }

  nlohmann::json manifest;
  manifest["command"] = "dataprep augment";
  manifest["seed"] = opt.seed;
  manifest["images"] = files.size();
  manifest["records"] = records;
  write_json_file(manifest, opt.out_dir / "records.json");
  std::cout << "augment: " << files.size() << " images, seed " << opt.seed << " -> "
            << opt.out_dir.string() << '\n';
  return kExitOk;
}

}  // namespace trailnav::cli

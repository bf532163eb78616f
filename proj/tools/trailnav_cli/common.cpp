#include "common.hpp"

#include <algorithm>
#include <fstream>

namespace trailnav::cli {

int exit_code_for(const Error& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
  if (dynamic_cast<const MissingFileError*>(&e) || dynamic_cast<const EmptyDirectoryError*>(&e))
    return kExitMissingInput;
  if (dynamic_cast<const MalformedImageError*>(&e) ||
      dynamic_cast<const IllegalClassValueError*>(&e) ||
      dynamic_cast<const InvalidWorldError*>(&e))
    return kExitMalformedInput;
  if (dynamic_cast<const NumericalFailureError*>(&e) ||
      dynamic_cast<const DegenerateGeometryError*>(&e) ||
      dynamic_cast<const UnderdeterminedError*>(&e) ||
      dynamic_cast<const DuplicateParamsError*>(&e) ||
      dynamic_cast<const InvalidMidlineError*>(&e) || dynamic_cast<const ZeroFactorError*>(&e))
    return kExitNumeric;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const UnmappedIdError*>(&e) || dynamic_cast<const BoxOutOfBoundsError*>(&e) ||
      dynamic_cast<const EmptyDatasetError*>(&e) ||
      dynamic_cast<const DimensionMismatchError*>(&e) ||
      dynamic_cast<const NoEvaluablePixelsError*>(&e) ||
      dynamic_cast<const WeightOutOfRangeError*>(&e))
    return kExitDataContract;
  return kExitOtherDomain;
}

std::vector<std::filesystem::path> collect_image_files(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw MissingFileError("no such directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".png" || ext == ".pgm") files.push_back(entry.path());
  }
  if (files.empty()) throw EmptyDirectoryError("no .png/.pgm files in " + dir.string());
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<std::string> config_comments(const std::string& command, const RunConfig& cfg) {
  std::vector<std::string> lines;
  lines.push_back("trailnav " + command);
  lines.push_back("seed=" + std::to_string(cfg.seed));
  for (const auto& [key, value] : cfg.echo()) lines.push_back("config " + key + "=" + value);
  return lines;
}

nlohmann::json config_json(const RunConfig& cfg) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, value] : cfg.echo()) obj[key] = value;
  return obj;
}

void write_json_file(const nlohmann::json& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed while writing " + path.string());
}

}  // namespace trailnav::cli

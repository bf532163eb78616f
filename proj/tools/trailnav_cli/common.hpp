#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trailnav/config.hpp"
#include "trailnav/errors.hpp"

namespace trailnav::cli {

// Exit codes, one per error class (0 = success).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitMissingInput = 4;
inline constexpr int kExitMalformedInput = 5;
inline constexpr int kExitNumeric = 6;
inline constexpr int kExitIo = 7;
inline constexpr int kExitDataContract = 8;
inline constexpr int kExitOtherDomain = 9;

int exit_code_for(const Error& e);

/// Sorted .png/.pgm files directly inside `dir`. Throws MissingFileError
/// if the directory does not exist and EmptyDirectoryError if no image
/// files are found.
std::vector<std::filesystem::path> collect_image_files(const std::filesystem::path& dir);

/// "# ..." comment block embedding the command name, seed, and the full
/// effective config, prepended to every CSV artifact.
std::vector<std::string> config_comments(const std::string& command, const RunConfig& cfg);

/// The same effective config as a JSON object of string values.
nlohmann::json config_json(const RunConfig& cfg);

void write_json_file(const nlohmann::json& doc, const std::filesystem::path& path);

struct ReplayOptions {
  std::filesystem::path mask_dir;
  std::filesystem::path out_dir = "replay_out";
};

struct SimulateOptions {
  std::filesystem::path world_file;
  std::filesystem::path out_dir = "sim_out";
  bool sweep = false;
  bool emit_plots = false;
};

struct EvalOptions {
  std::filesystem::path gt_dir;
  std::filesystem::path pred_dir;
  std::filesystem::path out_dir = "eval_out";
};

struct DataprepRelabelOptions {
  std::filesystem::path src_dir;
  std::filesystem::path out_dir;
  std::filesystem::path map_file;  // empty = built-in default map
};

struct DataprepBoxesOptions {
  std::filesystem::path csv_file;
  std::filesystem::path out_dir;
  int width = 0;
  int height = 0;
};

struct DataprepAugmentOptions {
  std::filesystem::path src_dir;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
};

int run_replay(const ReplayOptions& opt, const RunConfig& cfg);
int run_simulate(const SimulateOptions& opt, const RunConfig& cfg);
int run_eval(const EvalOptions& opt);
int run_dataprep_relabel(const DataprepRelabelOptions& opt);
int run_dataprep_boxes(const DataprepBoxesOptions& opt);
int run_dataprep_augment(const DataprepAugmentOptions& opt);

}  // namespace trailnav::cli

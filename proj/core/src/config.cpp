#include "trailnav/config.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trailnav/logs.hpp"

namespace trailnav {

namespace {

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError("value for '" + key + "' is not a number: " + value);
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError("value for '" + key + "' is not an integer: " + value);
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError("value for '" + key + "' is not an unsigned integer: " + value);
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("value for '" + key + "' is not a boolean: " + value);
}

struct KeyDef {
  const char* name;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

std::string fmt_int(long long v) { return std::to_string(v); }

const std::vector<KeyDef>& key_registry() {
  static const std::vector<KeyDef> keys = {
      {"midline.min_run_width",
       [](const RunConfig& c) { return fmt_int(c.midline.min_run_width); },
       [](RunConfig& c, const std::string& v) {
         c.midline.min_run_width = static_cast<int>(parse_int("midline.min_run_width", v));
       }},
      {"midline.min_rows", [](const RunConfig& c) { return fmt_int(c.midline.min_rows); },
       [](RunConfig& c, const std::string& v) {
         c.midline.min_rows = static_cast<int>(parse_int("midline.min_rows", v));
       }},
      {"midline.downsample_factor",
       [](const RunConfig& c) { return fmt_int(c.midline.downsample_factor); },
       [](RunConfig& c, const std::string& v) {
         c.midline.downsample_factor =
             static_cast<int>(parse_int("midline.downsample_factor", v));
       }},
      {"pathfit.degree", [](const RunConfig& c) { return fmt_int(c.fit_degree); },
       [](RunConfig& c, const std::string& v) {
         c.fit_degree = static_cast<int>(parse_int("pathfit.degree", v));
       }},
      {"comp.enabled", [](const RunConfig& c) { return c.comp_enabled ? "true" : "false"; },
       [](RunConfig& c, const std::string& v) { c.comp_enabled = parse_bool("comp.enabled", v); }},
      {"comp.base_w1", [](const RunConfig& c) { return format_double(c.comp.base_w1); },
       [](RunConfig& c, const std::string& v) { c.comp.base_w1 = parse_double("comp.base_w1", v); }},
      {"comp.base_w_alpha_hat",
       [](const RunConfig& c) { return format_double(c.comp.base_w_alpha_hat); },
       [](RunConfig& c, const std::string& v) {
         c.comp.base_w_alpha_hat = parse_double("comp.base_w_alpha_hat", v);
       }},
      {"comp.lambda_beta", [](const RunConfig& c) { return format_double(c.comp.lambda_beta); },
       [](RunConfig& c, const std::string& v) {
         c.comp.lambda_beta = parse_double("comp.lambda_beta", v);
       }},
      {"comp.lambda_alpha", [](const RunConfig& c) { return format_double(c.comp.lambda_alpha); },
       [](RunConfig& c, const std::string& v) {
         c.comp.lambda_alpha = parse_double("comp.lambda_alpha", v);
       }},
      {"comp.w_min", [](const RunConfig& c) { return format_double(c.comp.w_min); },
       [](RunConfig& c, const std::string& v) { c.comp.w_min = parse_double("comp.w_min", v); }},
      {"comp.max_consecutive_rejects",
       [](const RunConfig& c) { return fmt_int(c.planner.max_consecutive_rejects); },
       [](RunConfig& c, const std::string& v) {
         c.planner.max_consecutive_rejects =
             static_cast<int>(parse_int("comp.max_consecutive_rejects", v));
       }},
      {"planner.k_yaw", [](const RunConfig& c) { return format_double(c.planner.k_yaw); },
       [](RunConfig& c, const std::string& v) {
         c.planner.k_yaw = parse_double("planner.k_yaw", v);
       }},
      {"planner.k_lat", [](const RunConfig& c) { return format_double(c.planner.k_lat); },
       [](RunConfig& c, const std::string& v) {
         c.planner.k_lat = parse_double("planner.k_lat", v);
       }},
      {"planner.yaw_rate_limit",
       [](const RunConfig& c) { return format_double(c.planner.yaw_rate_limit); },
       [](RunConfig& c, const std::string& v) {
         c.planner.yaw_rate_limit = parse_double("planner.yaw_rate_limit", v);
       }},
      {"planner.lat_vel_limit",
       [](const RunConfig& c) { return format_double(c.planner.lat_vel_limit); },
       [](RunConfig& c, const std::string& v) {
         c.planner.lat_vel_limit = parse_double("planner.lat_vel_limit", v);
       }},
      {"planner.forward_speed",
       [](const RunConfig& c) { return format_double(c.planner.forward_speed); },
       [](RunConfig& c, const std::string& v) {
         c.planner.forward_speed = parse_double("planner.forward_speed", v);
       }},
      {"planner.rate_hz", [](const RunConfig& c) { return format_double(c.planner.rate_hz); },
       [](RunConfig& c, const std::string& v) {
         c.planner.rate_hz = parse_double("planner.rate_hz", v);
       }},
      {"sim.substep_s", [](const RunConfig& c) { return format_double(c.sim.substep_s); },
       [](RunConfig& c, const std::string& v) {
         c.sim.substep_s = parse_double("sim.substep_s", v);
       }},
      {"sim.duration_s", [](const RunConfig& c) { return format_double(c.sim.duration_s); },
       [](RunConfig& c, const std::string& v) {
         c.sim.duration_s = parse_double("sim.duration_s", v);
       }},
      {"sim.camera_height_m",
       [](const RunConfig& c) { return format_double(c.sim.camera_height_m); },
       [](RunConfig& c, const std::string& v) {
         c.sim.camera_height_m = parse_double("sim.camera_height_m", v);
       }},
      {"sim.camera_pitch_rad",
       [](const RunConfig& c) { return format_double(c.sim.camera_pitch_rad); },
       [](RunConfig& c, const std::string& v) {
         c.sim.camera_pitch_rad = parse_double("sim.camera_pitch_rad", v);
       }},
      {"sim.camera_hfov_rad",
       [](const RunConfig& c) { return format_double(c.sim.camera_hfov_rad); },
       [](RunConfig& c, const std::string& v) {
         c.sim.camera_hfov_rad = parse_double("sim.camera_hfov_rad", v);
       }},
      {"sim.image_width", [](const RunConfig& c) { return fmt_int(c.sim.image_width); },
       [](RunConfig& c, const std::string& v) {
         c.sim.image_width = static_cast<int>(parse_int("sim.image_width", v));
       }},
      {"sim.image_height", [](const RunConfig& c) { return fmt_int(c.sim.image_height); },
       [](RunConfig& c, const std::string& v) {
         c.sim.image_height = static_cast<int>(parse_int("sim.image_height", v));
       }},
      {"sim.noise_blob_failure_prob",
       [](const RunConfig& c) { return format_double(c.sim.noise_blob_failure_prob); },
       [](RunConfig& c, const std::string& v) {
         c.sim.noise_blob_failure_prob = parse_double("sim.noise_blob_failure_prob", v);
       }},
      {"sim.noise_blob_size_px",
       [](const RunConfig& c) { return format_double(c.sim.noise_blob_size_px); },
       [](RunConfig& c, const std::string& v) {
         c.sim.noise_blob_size_px = parse_double("sim.noise_blob_size_px", v);
       }},
      {"sim.noise_blob_persist_frames",
       [](const RunConfig& c) { return fmt_int(c.sim.noise_blob_persist_frames); },
       [](RunConfig& c, const std::string& v) {
         c.sim.noise_blob_persist_frames =
             static_cast<int>(parse_int("sim.noise_blob_persist_frames", v));
       }},
      {"sim.noise_pixel_flip_prob",
       [](const RunConfig& c) { return format_double(c.sim.noise_pixel_flip_prob); },
       [](RunConfig& c, const std::string& v) {
         c.sim.noise_pixel_flip_prob = parse_double("sim.noise_pixel_flip_prob", v);
       }},
      {"sim.noise_dropout_prob",
       [](const RunConfig& c) { return format_double(c.sim.noise_dropout_prob); },
       [](RunConfig& c, const std::string& v) {
         c.sim.noise_dropout_prob = parse_double("sim.noise_dropout_prob", v);
       }},
      {"sim.start_lateral_offset_m",
       [](const RunConfig& c) { return format_double(c.sim.start_lateral_offset_m); },
       [](RunConfig& c, const std::string& v) {
         c.sim.start_lateral_offset_m = parse_double("sim.start_lateral_offset_m", v);
       }},
      {"sim.start_heading_offset_rad",
       [](const RunConfig& c) { return format_double(c.sim.start_heading_offset_rad); },
       [](RunConfig& c, const std::string& v) {
         c.sim.start_heading_offset_rad = parse_double("sim.start_heading_offset_rad", v);
       }},
      {"seed", [](const RunConfig& c) { return std::to_string(c.seed); },
       [](RunConfig& c, const std::string& v) { c.seed = parse_u64("seed", v); }},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

void flatten_json(const nlohmann::json& node, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten_json(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  std::string text;
  if (node.is_string()) {
    text = node.get<std::string>();
  } else if (node.is_boolean()) {
    text = node.get<bool>() ? "true" : "false";
  } else if (node.is_number_integer()) {
    text = std::to_string(node.get<long long>());
  } else if (node.is_number_unsigned()) {
    text = std::to_string(node.get<unsigned long long>());
  } else if (node.is_number_float()) {
    text = format_double(node.get<double>());
  } else {
    throw ConfigError("config key '" + prefix + "' has an unsupported JSON value type");
  }
  out.emplace_back(prefix, text);
}

void check_range(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("config out of range: " + what);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  for (const auto& def : key_registry()) {
    if (key == def.name) {
      def.set(*this, value);
      return;
    }
  }
  throw ConfigError("unknown config key: " + key);
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(key_registry().size());
  for (const auto& def : key_registry()) out.emplace_back(def.name, def.get(*this));
  return out;
}

void RunConfig::validate() const {
  check_range(midline.min_run_width >= 1, "midline.min_run_width >= 1");
  check_range(midline.min_rows >= 2, "midline.min_rows >= 2");
  check_range(midline.downsample_factor >= 1, "midline.downsample_factor >= 1");
  check_range(fit_degree >= 1 && fit_degree <= 10, "pathfit.degree in [1, 10]");
  check_range(comp.base_w1 > 0.0 && comp.base_w1 <= 1.0, "comp.base_w1 in (0, 1]");
  check_range(comp.base_w_alpha_hat > 0.0 && comp.base_w_alpha_hat <= 1.0,
              "comp.base_w_alpha_hat in (0, 1]");
  check_range(comp.w_min >= 0.0 && comp.w_min <= comp.base_w1, "comp.w_min in [0, base_w1]");
  check_range(comp.w_min <= comp.base_w_alpha_hat, "comp.w_min <= comp.base_w_alpha_hat");
  check_range(comp.lambda_beta >= 0.0, "comp.lambda_beta >= 0");
  check_range(comp.lambda_alpha >= 0.0, "comp.lambda_alpha >= 0");
  check_range(planner.max_consecutive_rejects >= 1, "comp.max_consecutive_rejects >= 1");
  check_range(planner.k_yaw >= 0.0, "planner.k_yaw >= 0");
  check_range(planner.k_lat >= 0.0, "planner.k_lat >= 0");
  check_range(planner.yaw_rate_limit > 0.0, "planner.yaw_rate_limit > 0");
  check_range(planner.lat_vel_limit > 0.0, "planner.lat_vel_limit > 0");
  check_range(planner.forward_speed >= 0.0 && planner.forward_speed <= 2.0,
              "planner.forward_speed in [0, 2]");
  check_range(planner.rate_hz > 0.0, "planner.rate_hz > 0");
  check_range(sim.substep_s > 0.0, "sim.substep_s > 0");
  check_range(sim.duration_s >= 0.0, "sim.duration_s >= 0");
  check_range(sim.noise_blob_failure_prob >= 0.0 && sim.noise_blob_failure_prob <= 1.0,
              "sim.noise_blob_failure_prob in [0, 1]");
  check_range(sim.noise_pixel_flip_prob >= 0.0 && sim.noise_pixel_flip_prob <= 1.0,
              "sim.noise_pixel_flip_prob in [0, 1]");
  check_range(sim.noise_dropout_prob >= 0.0 && sim.noise_dropout_prob <= 1.0,
              "sim.noise_dropout_prob in [0, 1]");
  check_range(sim.noise_blob_size_px > 0.0, "sim.noise_blob_size_px > 0");
  check_range(sim.noise_blob_persist_frames >= 1, "sim.noise_blob_persist_frames >= 1");
  camera().validate();
}

PipelineConfig RunConfig::pipeline() const {
  PipelineConfig cfg;
  cfg.midline = midline;
  cfg.fit_degree = fit_degree;
  cfg.compensator = CompensatorState{};
  cfg.compensator.base_w1 = comp.base_w1;
  cfg.compensator.base_w_alpha_hat = comp.base_w_alpha_hat;
  cfg.compensator.lambda_beta = comp.lambda_beta;
  cfg.compensator.lambda_alpha = comp.lambda_alpha;
  cfg.compensator.w_min = comp.w_min;
  if (!comp_enabled) {
    // Full trust in each new frame: blending and attenuation become no-ops
    // while failure handling (hold + reject counting) stays intact.
    cfg.compensator.base_w1 = 1.0;
    cfg.compensator.base_w_alpha_hat = 1.0;
    cfg.compensator.w_min = 1.0;
  }
  cfg.planner = planner;
  return cfg;
}

sim::CameraModel RunConfig::camera() const {
  sim::CameraModel cam;
  cam.height_m = sim.camera_height_m;
  cam.pitch_rad = sim.camera_pitch_rad;
  cam.hfov_rad = sim.camera_hfov_rad;
  cam.image_width = sim.image_width;
  cam.image_height = sim.image_height;
  return cam;
}

sim::NoiseModel RunConfig::noise() const {
  sim::NoiseModel model;
  model.blob_failure_prob = sim.noise_blob_failure_prob;
  model.blob_size_px = sim.noise_blob_size_px;
  model.blob_persist_frames = sim.noise_blob_persist_frames;
  model.pixel_flip_prob = sim.noise_pixel_flip_prob;
  model.dropout_prob = sim.noise_dropout_prob;
  model.seed = seed;
  return model;
}

sim::EpisodeConfig RunConfig::episode() const {
  sim::EpisodeConfig ep;
  ep.duration_s = sim.duration_s;
  ep.substep_s = sim.substep_s;
  ep.start_lateral_offset_m = sim.start_lateral_offset_m;
  ep.start_heading_offset_rad = sim.start_heading_offset_rad;
  ep.seed = seed;
  return ep;
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("no such config file: " + path.string());

  if (path.extension() == ".json") {
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ConfigError("JSON config must be an object");
    std::vector<std::pair<std::string, std::string>> kvs;
    flatten_json(doc, "", kvs);
    for (const auto& [key, value] : kvs) cfg.set(key, value);
    return;
  }

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + " is not key=value: " + stripped);
    cfg.set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  RunConfig cfg;
  apply_config_file(cfg, path);
  return cfg;
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& sets) {
  for (const auto& item : sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set expects key=value, got: " + item);
    cfg.set(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
}

}  // namespace trailnav

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "common.hpp"
#include "trailnav/logs.hpp"
#include "trailnav/mask.hpp"
#include "trailnav/sim/episode.hpp"

namespace trailnav::cli {

namespace {

constexpr double kSweepSpeeds[] = {0.2, 0.4, 0.6, 0.8, 1.0};

// Top-down grayscale plot: trail band in light gray, centerline in mid
// gray, driven path in black.
void write_plot(const sim::TrailWorld& world, const std::vector<TraceEntry>& trace,
                const std::filesystem::path& path) {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
      return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (double s = 0.0; s <= world.length(); s += 0.05) {
    const sim::RobotPose p = world.pose_at(s);
    grow(p.x, p.y);
  }
  for (const auto& t : trace) grow(t.x, t.y);

  const double margin = world.trail_width() + 0.5;
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = 600.0 / std::max(span, 1e-6);  // px per metre
  const int w = std::max(64, static_cast<int>(std::lround((max_x - min_x) * scale)));
  const int h = std::max(64, static_cast<int>(std::lround((max_y - min_y) * scale)));

  std::vector<std::uint8_t> img(static_cast<std::size_t>(w) * h, 255);
  const double half = world.trail_width() / 2.0;
  for (int py = 0; py < h; ++py) {
    for (int px = 0; px < w; ++px) {
      const double x = min_x + (px + 0.5) / scale;
      const double y = max_y - (py + 0.5) / scale;
      const double dist = world.nearest(x, y).distance;
      if (dist <= 0.03) {
        img[static_cast<std::size_t>(py) * w + px] = 140;
      } else if (dist <= half) {
        img[static_cast<std::size_t>(py) * w + px] = 210;
      }
    }
  }
  auto put = [&](double x, double y) {
    const int px = static_cast<int>(std::lround((x - min_x) * scale - 0.5));
    const int py = static_cast<int>(std::lround((max_y - y) * scale - 0.5));
    if (px < 0 || px >= w || py < 0 || py >= h) return;
    img[static_cast<std::size_t>(py) * w + px] = 0;
  };
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const auto& a = trace[i - 1];
    const auto& b = trace[i];
    const int steps = 1 + static_cast<int>(std::hypot(b.x - a.x, b.y - a.y) * scale);
    for (int k = 0; k <= steps; ++k) {
      const double f = static_cast<double>(k) / steps;
      put(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y));
    }
  }
  save_gray_image(w, h, img, path);
}

nlohmann::json metrics_json(const sim::RunMetrics& m) {
  nlohmann::json obj;
  obj["completed"] = m.completed;
  obj["distance_covered"] = m.distance_covered;
  obj["max_lateral_dev"] = m.max_lateral_dev;
  obj["rms_lateral_dev"] = m.rms_lateral_dev;
  obj["off_trail_events"] = m.off_trail_events;
  obj["safety_stops"] = m.safety_stops;
  obj["frames"] = m.frames;
  obj["rejected_frames"] = m.rejected_frames;
  return obj;
}

}  // namespace

int run_simulate(const SimulateOptions& opt, const RunConfig& cfg) {
  const sim::TrailWorld world = sim::load_world(opt.world_file);
  std::filesystem::create_directories(opt.out_dir);

  std::vector<double> speeds;
  if (opt.sweep) {
    speeds.assign(std::begin(kSweepSpeeds), std::end(kSweepSpeeds));
  } else {
    speeds.push_back(cfg.planner.forward_speed);
  }

  nlohmann::json runs = nlohmann::json::array();
  for (double speed : speeds) {
    RunConfig run_cfg = cfg;
    run_cfg.planner.forward_speed = speed;
    run_cfg.validate();

    const sim::EpisodeResult result = sim::run_episode(
        world, run_cfg.pipeline(), run_cfg.camera(), run_cfg.noise(), run_cfg.episode());

    const std::string suffix = opt.sweep ? "_" + format_double(speed) : "";
    const auto commands_path = opt.out_dir / ("commands" + suffix + ".csv");
    const auto trace_path = opt.out_dir / ("trace" + suffix + ".csv");
    const auto comments = config_comments("simulate", run_cfg);
    write_command_log(commands_path, result.commands, comments);
    write_pose_trace(trace_path, result.trace, comments);

    nlohmann::json record;
    record["speed"] = speed;
    record["metrics"] = metrics_json(result.metrics);
    record["commands_csv"] = commands_path.filename().string();
    record["trace_csv"] = trace_path.filename().string();
    if (opt.emit_plots) {
      const auto plot_path = opt.out_dir / ("plot" + suffix + ".png");
      write_plot(world, result.trace, plot_path);
      record["plot"] = plot_path.filename().string();
    }
    runs.push_back(record);

    std::cout << "simulate: speed " << format_double(speed) << " m/s -> "
              << (result.metrics.completed ? "completed" : "not completed") << ", rms dev "
              << format_double(result.metrics.rms_lateral_dev) << " m\n";
  }

  nlohmann::json summary;
  summary["command"] = "simulate";
  summary["world"] = opt.world_file.filename().string();
  summary["seed"] = cfg.seed;
  summary["config"] = config_json(cfg);
  summary["runs"] = runs;
  write_json_file(summary, opt.out_dir / "summary.json");
  return kExitOk;
}

}  // namespace trailnav::cli

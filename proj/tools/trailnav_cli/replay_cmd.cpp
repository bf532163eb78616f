#include <filesystem>
#include <iostream>

#include "common.hpp"
#include "trailnav/logs.hpp"
#include "trailnav/mask.hpp"
#include "trailnav/pipeline.hpp"

namespace trailnav::cli {

int run_replay(const ReplayOptions& opt, const RunConfig& cfg) {
  cfg.validate();
  const auto files = collect_image_files(opt.mask_dir);
  std::filesystem::create_directories(opt.out_dir);

  Pipeline pipeline(cfg.pipeline());
  const double rate_hz = cfg.planner.rate_hz;

  std::vector<CommandLogEntry> entries;
  entries.reserve(files.size());
  nlohmann::json skipped = nlohmann::json::array();
  int rejects = 0;
  int safety_stop_frames = 0;

  for (std::size_t i = 0; i < files.size(); ++i) {
    const FrameStamp stamp{i, static_cast<double>(i) / rate_hz};
    PipelineStepResult step = [&] {
      try {
        return pipeline.step(load_mask(files[i]), stamp);
      } catch (const Error& e) {
        skipped.push_back({{"file", files[i].filename().string()}, {"error", e.what()}});
        return pipeline.step_absent(stamp);
      }
    }();

    if (step.rejected) ++rejects;
    if (step.command.safety_stop) ++safety_stop_frames;

    CommandLogEntry entry;
    entry.seq = stamp.sequence;
    entry.time_s = stamp.time_s;
    entry.yaw_rate = step.command.yaw_rate;
    entry.lat_vel = step.command.lateral_velocity;
    entry.fwd_vel = step.command.forward_velocity;
    entry.safety_stop = step.command.safety_stop;
    entry.applied_w1 = step.plan ? step.plan->applied_w1 : 0.0;
    entry.alpha = step.plan ? step.plan->alpha : 0.0;
    entry.latency_ms = step.latency_ms;
    entries.push_back(entry);
  }

  const auto commands_path = opt.out_dir / "commands.csv";
  write_command_log(commands_path, entries, config_comments("replay", cfg));

  nlohmann::json summary;
  summary["command"] = "replay";
  summary["seed"] = cfg.seed;
  summary["config"] = config_json(cfg);
  summary["mask_dir"] = opt.mask_dir.string();
  summary["frames"] = entries.size();
  summary["rejects"] = rejects;
  summary["safety_stop_frames"] = safety_stop_frames;
  summary["skipped_files"] = skipped;
  summary["commands_csv"] = commands_path.filename().string();
  write_json_file(summary, opt.out_dir / "summary.json");

  std::cout << "replay: " << entries.size() << " frames, " << rejects << " rejects -> "
            << opt.out_dir.string() << '\n';
  return kExitOk;
}

}  // namespace trailnav::cli

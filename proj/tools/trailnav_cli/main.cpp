#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "common.hpp"

namespace {

using namespace trailnav;
using namespace trailnav::cli;

struct ConfigFlags {
  std::string config_file;
  std::vector<std::string> sets;
};

void add_config_flags(CLI::App* sub, ConfigFlags& flags) {
  sub->add_option("--config", flags.config_file,
                  "Config file (key=value text, or JSON for .json files)");
  sub->add_option("--set", flags.sets, "Override a config key, e.g. --set planner.k_yaw=1.2")
      ->take_all();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "trailnav: trail-following navigation toolkit (mask -> midline -> "
      "polynomial path -> compensated steering), plus a closed-loop 2D "
      "simulator, dataset preparation, and mask scoring.\n"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 unexpected, 2 usage, 3 config, 4 missing input,\n"
      "5 malformed input, 6 numeric/geometry, 7 I/O, 8 data contract, 9 other.");

  // replay
  ReplayOptions replay_opt;
  ConfigFlags replay_flags;
  CLI::App* replay = app.add_subcommand(
      "replay", "Run the perception->planning pipeline over a directory of mask files");
  replay->add_option("masks", replay_opt.mask_dir, "Directory of .png/.pgm mask files")
      ->required();
  replay->add_option("--out", replay_opt.out_dir, "Output directory (default replay_out)");
  add_config_flags(replay, replay_flags);

  // simulate
  SimulateOptions sim_opt;
  ConfigFlags sim_flags;
  double sim_speed = -1.0;
  double sim_duration = -1.0;
  std::uint64_t sim_seed = 0;
  bool sim_seed_given = false;
  bool sim_no_comp = false;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Closed-loop episode in a synthetic trail world");
  simulate->add_option("world", sim_opt.world_file, "World JSON file")->required();
  simulate->add_option("--out", sim_opt.out_dir, "Output directory (default sim_out)");
  simulate->add_option("--speed", sim_speed, "Forward speed in m/s");
  simulate->add_option("--duration", sim_duration, "Episode duration in s (0 = auto)");
  simulate
      ->add_option_function<std::uint64_t>(
          "--seed", [&](std::uint64_t v) { sim_seed = v; sim_seed_given = true; }, "Run seed")
      ->expected(1);
  simulate->add_flag("--sweep", sim_opt.sweep, "Run all speeds {0.2,0.4,0.6,0.8,1.0} m/s");
  simulate->add_flag("--no-compensation", sim_no_comp, "Disable trajectory compensation");
  simulate->add_flag("--emit-plots", sim_opt.emit_plots, "Write top-down path plots (PNG)");
  add_config_flags(simulate, sim_flags);

  // dataprep
  CLI::App* dataprep = app.add_subcommand("dataprep", "Dataset preparation utilities");
  dataprep->require_subcommand(1);

  DataprepRelabelOptions relabel_opt;
  CLI::App* relabel =
      dataprep->add_subcommand("relabel", "Map source class-id images to 3-class masks");
  relabel->add_option("src", relabel_opt.src_dir, "Directory of class-id images")->required();
  relabel->add_option("out", relabel_opt.out_dir, "Output directory")->required();
  relabel->add_option("--map", relabel_opt.map_file,
                      "Label map JSON (default: built-in 34-class map)");

  DataprepBoxesOptions boxes_opt;
  CLI::App* boxes =
      dataprep->add_subcommand("boxes", "Rasterize rectangle box labels into masks");
  boxes->add_option("csv", boxes_opt.csv_file, "CSV of image,x,y,w,h rows")->required();
  boxes->add_option("out", boxes_opt.out_dir, "Output directory")->required();
  boxes->add_option("--width", boxes_opt.width, "Mask width in pixels")->required();
  boxes->add_option("--height", boxes_opt.height, "Mask height in pixels")->required();

  DataprepAugmentOptions augment_opt;
  CLI::App* augment = dataprep->add_subcommand(
      "augment", "Random flip/rotation augmentation with a replayable record");
  augment->add_option("src", augment_opt.src_dir, "Directory of mask files")->required();
  augment->add_option("out", augment_opt.out_dir, "Output directory")->required();
  augment->add_option("--seed", augment_opt.seed, "Augmentation seed");

  // eval
  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "Score predicted masks against ground truth");
  eval->add_option("--gt", eval_opt.gt_dir, "Ground-truth mask directory")->required();
  eval->add_option("--pred", eval_opt.pred_dir, "Predicted mask directory")->required();
  eval->add_option("--out", eval_opt.out_dir, "Output directory (default eval_out)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (replay->parsed()) {
      RunConfig cfg;
      if (!replay_flags.config_file.empty()) apply_config_file(cfg, replay_flags.config_file);
      apply_overrides(cfg, replay_flags.sets);
      return run_replay(replay_opt, cfg);
    }
    if (simulate->parsed()) {
      RunConfig cfg;
      // Simulation profile: rendered frames are 160x120, so the default
      // working grid divides by 2 (80x60) to match the robot-profile
      // working resolution of 640x480 / 8.
      cfg.midline.downsample_factor = 2;
      if (!sim_flags.config_file.empty()) apply_config_file(cfg, sim_flags.config_file);
      if (sim_speed >= 0.0) cfg.planner.forward_speed = sim_speed;
      if (sim_duration >= 0.0) cfg.sim.duration_s = sim_duration;
      if (sim_seed_given) cfg.seed = sim_seed;
      if (sim_no_comp) cfg.comp_enabled = false;
      apply_overrides(cfg, sim_flags.sets);
      cfg.validate();
      return run_simulate(sim_opt, cfg);
    }
    if (eval->parsed()) return run_eval(eval_opt);
    if (relabel->parsed()) return run_dataprep_relabel(relabel_opt);
    if (boxes->parsed()) return run_dataprep_boxes(boxes_opt);
    if (augment->parsed()) return run_dataprep_augment(augment_opt);
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

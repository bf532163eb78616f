#include <filesystem>
#include <fstream>
#include <iostream>

#include "common.hpp"
#include "trailnav/evalkit.hpp"
#include "trailnav/logs.hpp"
#include "trailnav/mask.hpp"

namespace trailnav::cli {

int run_eval(const EvalOptions& opt) {
  const auto gt_files = collect_image_files(opt.gt_dir);
  std::filesystem::create_directories(opt.out_dir);

  const auto csv_path = opt.out_dir / "per_image.csv";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw IoError("cannot open output file: " + csv_path.string());
  csv << "file,cross_entropy,pixel_accuracy,iou_void,iou_traversable,iou_untraversable,"
         "evaluated_pixels\n";

  double sum_ce = 0.0, sum_acc = 0.0;
  double sum_iou[kNumClasses] = {0.0, 0.0, 0.0};
  std::size_t iou_n[kNumClasses] = {0, 0, 0};
  std::size_t evaluated_images = 0;

  for (const auto& gt_path : gt_files) {
    const auto pred_path = opt.pred_dir / gt_path.filename();
    if (!std::filesystem::exists(pred_path)) continue;
    const SegMask gt = load_mask(gt_path);
    const SegMask pred = load_mask(pred_path);

    // Predictions arrive as hard masks; scoring treats them as one-hot
    // probability fields, so cross-entropy is 0 on agreement and the
    // floored -log on disagreement.
    evalkit::EvalReport report = evalkit::overlap_metrics(gt, pred);
    report.cross_entropy = evalkit::cross_entropy(gt, evalkit::ProbMask::from_hard(pred));

    csv << gt_path.filename().string() << ',' << format_double(report.cross_entropy) << ','
        << format_double(report.pixel_accuracy);
    for (int c = 0; c < kNumClasses; ++c) {
      csv << ',';
      if (report.per_class_iou[c]) csv << format_double(*report.per_class_iou[c]);
    }
    csv << ',' << report.evaluated_pixels << '\n';

    sum_ce += report.cross_entropy;
    sum_acc += report.pixel_accuracy;
    for (int c = 0; c < kNumClasses; ++c) {
      if (report.per_class_iou[c]) {
        sum_iou[c] += *report.per_class_iou[c];
        ++iou_n[c];
      }
    }
    ++evaluated_images;
  }
  if (!csv) throw IoError("failed while writing " + csv_path.string());
  if (evaluated_images == 0)
    throw EmptyDirectoryError("no ground-truth file has a matching prediction in " +
                              opt.pred_dir.string());

  nlohmann::json report;
  report["command"] = "eval";
  report["gt_dir"] = opt.gt_dir.string();
  report["pred_dir"] = opt.pred_dir.string();
  report["images"] = evaluated_images;
  report["mean_cross_entropy"] = sum_ce / static_cast<double>(evaluated_images);
  report["mean_pixel_accuracy"] = sum_acc / static_cast<double>(evaluated_images);
  const char* class_names[kNumClasses] = {"void", "traversable", "untraversable"};
  nlohmann::json mean_iou = nlohmann::json::object();
  for (int c = 0; c < kNumClasses; ++c) {
    if (iou_n[c] > 0) {
      mean_iou[class_names[c]] = sum_iou[c] / static_cast<double>(iou_n[c]);
    } else {
      mean_iou[class_names[c]] = nullptr;
    }
  }
  report["mean_iou"] = mean_iou;
  report["per_image_csv"] = csv_path.filename().string();
  write_json_file(report, opt.out_dir / "report.json");

  std::cout << "eval: " << evaluated_images << " image pairs -> " << opt.out_dir.string() << '\n';
  return kExitOk;
}

}  // namespace trailnav::cli

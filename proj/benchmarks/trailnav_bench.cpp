#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "trailnav/mask.hpp"
#include "trailnav/midline.hpp"
#include "trailnav/pathfit.hpp"
#include "trailnav/pipeline.hpp"
#include "trailnav/rng.hpp"
#include "trailnav/sim/camera.hpp"
#include "trailnav/sim/noise.hpp"
#include "trailnav/sim/world.hpp"

namespace {

using namespace trailnav;

SegMask band_mask(int width, int height) {
  SegMask mask(width, height, SegClass::Untraversable);
  const int lo = width * 2 / 5;
  const int hi = width * 3 / 5;
  for (int y = 0; y < height; ++y)
    for (int x = lo; x < hi; ++x) mask.set(x, y, SegClass::Traversable);
  return mask;
}

sim::TrailWorld bench_world() {
  std::vector<sim::TrailSegment> segments(2);
  segments[0].kind = sim::TrailSegment::Kind::Line;
  segments[0].length = 8.0;
  segments[1].kind = sim::TrailSegment::Kind::Arc;
  segments[1].length = 9.0;
  segments[1].radius = 6.0;
  segments[1].turn = +1;
  return sim::make_world(segments, 1.0);
}

// The robot-profile hot path: one full perception->planning step on a
// camera-resolution mask. The 250 ms budget applies to this call.
void BM_PipelineStep640x480(benchmark::State& state) {
  const SegMask mask = band_mask(640, 480);
  Pipeline pipeline{PipelineConfig{}};
  std::uint64_t seq = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pipeline.step(mask, {seq, static_cast<double>(seq) / 4.0}));
    ++seq;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_PipelineStep640x480)->Unit(benchmark::kMillisecond);

void BM_Downsample640x480(benchmark::State& state) {
  const SegMask mask = band_mask(640, 480);
  for (auto _ : state) benchmark::DoNotOptimize(downsample(mask, 8));
}
BENCHMARK(BM_Downsample640x480)->Unit(benchmark::kMicrosecond);

void BM_ExtractMidline80x60(benchmark::State& state) {
  const SegMask mask = band_mask(80, 60);
  const MidlineConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(extract_midline(mask, cfg));
}
BENCHMARK(BM_ExtractMidline80x60)->Unit(benchmark::kMicrosecond);

void BM_FitPolyDegree3(benchmark::State& state) {
  Rng rng(42);
  std::vector<double> params, values;
  for (int i = 0; i < 60; ++i) {
    params.push_back(i / 59.0);
    values.push_back(rng.uniform(-10.0, 10.0));
  }
  for (auto _ : state) benchmark::DoNotOptimize(fit_poly(params, values, 3));
}
BENCHMARK(BM_FitPolyDegree3)->Unit(benchmark::kMicrosecond);

void BM_RenderMask160x120(benchmark::State& state) {
  const sim::TrailWorld world = bench_world();
  const sim::CameraModel cam;
  const sim::RobotPose pose = world.pose_at(4.0);
  for (auto _ : state) benchmark::DoNotOptimize(sim::render_mask(world, pose, cam));
}
BENCHMARK(BM_RenderMask160x120)->Unit(benchmark::kMicrosecond);

void BM_InjectNoise160x120(benchmark::State& state) {
  const sim::TrailWorld world = bench_world();
  const SegMask mask = sim::render_mask(world, world.pose_at(4.0), sim::CameraModel{});
  sim::NoiseModel noise;
  noise.blob_failure_prob = 0.2;
  noise.pixel_flip_prob = 0.02;
  noise.seed = 7;
  std::uint64_t seq = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::inject_noise(mask, noise, {seq, static_cast<double>(seq) / 4.0}));
    ++seq;
  }
}
BENCHMARK(BM_InjectNoise160x120)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

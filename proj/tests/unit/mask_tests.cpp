#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "trailnav/mask.hpp"
#include "trailnav/rng.hpp"

using namespace trailnav;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "trailnav_mask_tests";
  fs::create_directories(dir);
  return dir;
}

SegMask random_mask(Rng& rng, int w, int h) {
  std::vector<SegClass> data(static_cast<std::size_t>(w) * h);
  for (auto& c : data) c = static_cast<SegClass>(rng.uniform_index(3));
  return SegMask(w, h, std::move(data));
}

// Independent per-block counting, no shared code with downsample().
SegClass block_majority_oracle(const SegMask& m, int bx, int by, int factor) {
  std::array<int, 3> counts{0, 0, 0};
  for (int y = by * factor; y < std::min((by + 1) * factor, m.height()); ++y)
    for (int x = bx * factor; x < std::min((bx + 1) * factor, m.width()); ++x)
      ++counts[static_cast<int>(m.at(x, y))];
  // majority with tie priority Untraversable > Traversable > Void
  SegClass best = SegClass::Untraversable;
  int best_count = counts[2];
  if (counts[1] > best_count) { best = SegClass::Traversable; best_count = counts[1]; }
  if (counts[0] > best_count) { best = SegClass::Void; best_count = counts[0]; }
  return best;
}

}  // namespace

TEST_SUITE("mask") {

TEST_CASE("2x2 byte grid decodes to the expected classes") {
  const auto path = scratch_dir() / "tiny.pgm";
  std::ofstream f(path, std::ios::binary);
  f << "P5\n2 2\n255\n";
  const std::array<unsigned char, 4> bytes{1, 1, 0, 2};
  f.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  f.close();

  const SegMask m = load_mask(path);
  CHECK(m.width() == 2);
  CHECK(m.height() == 2);
  CHECK(m.at(0, 0) == SegClass::Traversable);
  CHECK(m.at(1, 0) == SegClass::Traversable);
  CHECK(m.at(0, 1) == SegClass::Void);
  CHECK(m.at(1, 1) == SegClass::Untraversable);
}

TEST_CASE("pixel value outside 0..2 is rejected") {
  const auto path = scratch_dir() / "bad_value.pgm";
  std::ofstream f(path, std::ios::binary);
  f << "P5\n2 1\n255\n";
  const std::array<unsigned char, 2> bytes{1, 7};
  f.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  f.close();

  CHECK_THROWS_AS(load_mask(path), IllegalClassValueError);
}

TEST_CASE("missing file and malformed image raise their own errors") {
  CHECK_THROWS_AS(load_mask(scratch_dir() / "does_not_exist.pgm"), MissingFileError);

  const auto path = scratch_dir() / "garbage.pgm";
  std::ofstream(path) << "this is not an image";
  CHECK_THROWS_AS(load_mask(path), MalformedImageError);
}

TEST_CASE("save/load round-trips 100 random masks in both formats") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const int w = 1 + static_cast<int>(rng.uniform_index(40));
    const int h = 1 + static_cast<int>(rng.uniform_index(40));
    const SegMask m = random_mask(rng, w, h);
    const auto path = scratch_dir() / ((i % 2 == 0) ? "rt.pgm" : "rt.png");
    save_mask(m, path);
    CHECK(load_mask(path) == m);
  }
}

TEST_CASE("640x480 constant mask round-trips as 307200 traversable pixels") {
  const SegMask m(640, 480, SegClass::Traversable);
  const auto path = scratch_dir() / "constant.png";
  save_mask(m, path);
  const SegMask back = load_mask(path);
  REQUIRE(back.width() == 640);
  REQUIRE(back.height() == 480);
  std::size_t traversable = 0;
  for (const auto c : back.data())
    if (c == SegClass::Traversable) ++traversable;
  CHECK(traversable == 307200);
}

TEST_CASE("downsample factor 1 is the identity") {
  Rng rng(7);
  const SegMask m = random_mask(rng, 13, 9);
  CHECK(downsample(m, 1) == m);
}

TEST_CASE("downsample of a constant mask is constant") {
  const SegMask m(4, 4, SegClass::Traversable);
  const SegMask d = downsample(m, 2);
  REQUIRE(d.width() == 2);
  REQUIRE(d.height() == 2);
  for (const auto c : d.data()) CHECK(c == SegClass::Traversable);
}

TEST_CASE("downsample matches the brute-force block-majority oracle") {
  Rng rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    const int w = 5 + static_cast<int>(rng.uniform_index(30));
    const int h = 5 + static_cast<int>(rng.uniform_index(30));
    const int factor = 2 + static_cast<int>(rng.uniform_index(5));
    const SegMask m = random_mask(rng, w, h);
    const SegMask d = downsample(m, factor);

    REQUIRE(d.width() == (w + factor - 1) / factor);
    REQUIRE(d.height() == (h + factor - 1) / factor);
    for (int by = 0; by < d.height(); ++by)
      for (int bx = 0; bx < d.width(); ++bx)
        CHECK(d.at(bx, by) == block_majority_oracle(m, bx, by, factor));
  }
}

TEST_CASE("downsample ties break toward the conservative class") {
  // 2x2 block with two Untraversable and two Traversable pixels.
  SegMask m(2, 2, SegClass::Traversable);
  m.set(0, 0, SegClass::Untraversable);
  m.set(1, 1, SegClass::Untraversable);
  CHECK(downsample(m, 2).at(0, 0) == SegClass::Untraversable);

  // Void ties lose against Traversable.
  SegMask v(2, 2, SegClass::Void);
  v.set(0, 0, SegClass::Traversable);
  v.set(1, 1, SegClass::Traversable);
  CHECK(downsample(v, 2).at(0, 0) == SegClass::Traversable);
}

TEST_CASE("downsample never increases pixel count and rejects factor 0") {
  Rng rng(3);
  const SegMask m = random_mask(rng, 17, 11);
  for (int factor = 1; factor <= 6; ++factor) {
    const SegMask d = downsample(m, factor);
    CHECK(d.width() * d.height() <= m.width() * m.height());
  }
  CHECK_THROWS_AS(downsample(m, 0), ZeroFactorError);
}

}  // TEST_SUITE

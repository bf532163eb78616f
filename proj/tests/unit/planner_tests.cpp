#include <doctest.h>

#include <cmath>

#include "trailnav/planner.hpp"
#include "trailnav/rng.hpp"

using namespace trailnav;

namespace {

CompensatedPlan plan_with(double alpha, double foot_x) {
  CompensatedPlan p;
  p.alpha = alpha;
  p.beta = PolyCoeffs{{foot_x}};  // eval at parameter 0 = beta_0
  return p;
}

}  // namespace

TEST_SUITE("planner") {

TEST_CASE("centered midline and zero yaw give a zero steering command") {
  const PlannerConfig cfg;
  const NavCommand cmd = make_command(plan_with(0.0, 39.5), 80, cfg, {}, 0);
  CHECK(cmd.yaw_rate == doctest::Approx(0.0));
  CHECK(cmd.lateral_velocity == doctest::Approx(0.0));
  CHECK(cmd.forward_velocity == doctest::Approx(cfg.forward_speed));
  CHECK_FALSE(cmd.safety_stop);
}

TEST_CASE("alpha 0.1 with gain 1.5 commands 0.15 rad/s") {
  PlannerConfig cfg;
  cfg.k_yaw = 1.5;
  const NavCommand cmd = make_command(plan_with(0.1, 39.5), 80, cfg, {}, 0);
  CHECK(cmd.yaw_rate == doctest::Approx(0.15).epsilon(1e-12));
}

TEST_CASE("nine consecutive rejects trip the safety stop") {
  const PlannerConfig cfg;  // max_consecutive_rejects = 8
  const NavCommand cmd = make_command(plan_with(0.4, 70.0), 80, cfg, {}, 9);
  CHECK(cmd.safety_stop);
  CHECK(cmd.yaw_rate == doctest::Approx(0.0));
  CHECK(cmd.lateral_velocity == doctest::Approx(0.0));
  CHECK(cmd.forward_velocity == doctest::Approx(0.0));

  CHECK_FALSE(make_command(plan_with(0.4, 70.0), 80, cfg, {}, 8).safety_stop);
}

TEST_CASE("commands never exceed the configured limits") {
  Rng rng(1234);
  const PlannerConfig cfg;
  for (int trial = 0; trial < 2000; ++trial) {
    const double alpha = rng.uniform(-1.5, 1.5);
    const double foot = rng.uniform(-200.0, 300.0);
    const NavCommand cmd = make_command(plan_with(alpha, foot), 80, cfg, {}, 0);
    CHECK(std::abs(cmd.yaw_rate) <= cfg.yaw_rate_limit + 1e-12);
    CHECK(std::abs(cmd.lateral_velocity) <= cfg.lat_vel_limit + 1e-12);
  }
}

TEST_CASE("trail to the right of center gives positive commands, mirror negates") {
  const PlannerConfig cfg;
  // foot point right of center, trail bending right
  const NavCommand right = make_command(plan_with(0.2, 55.0), 80, cfg, {}, 0);
  CHECK(right.yaw_rate > 0.0);
  CHECK(right.lateral_velocity > 0.0);

  // mirrored geometry: alpha negated, foot mirrored around (width-1)/2
  const NavCommand left = make_command(plan_with(-0.2, 79.0 - 55.0), 80, cfg, {}, 0);
  CHECK(left.yaw_rate == doctest::Approx(-right.yaw_rate).epsilon(1e-12));
  CHECK(left.lateral_velocity == doctest::Approx(-right.lateral_velocity).epsilon(1e-12));
}

TEST_CASE("lateral error saturates at the image edge") {
  PlannerConfig cfg;
  cfg.k_lat = 0.5;
  cfg.lat_vel_limit = 10.0;  // keep the clamp out of the way
  // foot far beyond the right edge: normalized e clamps to 1
  const NavCommand cmd = make_command(plan_with(0.0, 500.0), 80, cfg, {}, 0);
  CHECK(cmd.lateral_velocity == doctest::Approx(cfg.k_lat).epsilon(1e-12));
}

}  // TEST_SUITE

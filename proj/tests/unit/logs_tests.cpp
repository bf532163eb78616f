#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "trailnav/logs.hpp"
#include "trailnav/rng.hpp"

using namespace trailnav;

TEST_SUITE("logs") {

TEST_CASE("format_double emits the shortest round-trippable form") {
  CHECK(format_double(0.15) == "0.15");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.7) == "-0.7");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(2.5e-10) == "2.5e-10");
  CHECK(format_double(1e6) == "1e+06");
}

TEST_CASE("format_double round-trips random doubles exactly") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12.0, 12.0));
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("command log writes comments, header, then rows") {
  CommandLogEntry e;
  e.seq = 3;
  e.time_s = 0.75;
  e.yaw_rate = -0.15;
  e.lat_vel = 0.05;
  e.fwd_vel = 0.7;
  e.safety_stop = false;
  e.applied_w1 = 0.6;
  e.alpha = -0.1;
  e.latency_ms = 2.5;

  std::ostringstream out;
  write_command_log(out, {e}, {"config planner.k_yaw=1.5", "world curved"});
  const std::string text = out.str();
  CHECK(text ==
        "# config planner.k_yaw=1.5\n"
        "# world curved\n"
        "seq,time_s,yaw_rate,lat_vel,fwd_vel,safety_stop,applied_w1,alpha,latency_ms\n"
        "3,0.75,-0.15,0.05,0.7,0,0.6,-0.1,2.5\n");
}

TEST_CASE("safety stop renders as one") {
  CommandLogEntry e;
  e.safety_stop = true;
  std::ostringstream out;
  write_command_log(out, {e}, {});
  CHECK(out.str() == std::string(kCommandLogHeader) +
                         "\n0,0,0,0,0,1,0,0,0\n");
}

TEST_CASE("pose trace writes its header and rows") {
  TraceEntry t;
  t.time_s = 1.25;
  t.x = 0.875;
  t.y = -0.125;
  t.heading = 0.5;
  t.lat_dev = 0.125;
  std::ostringstream out;
  write_pose_trace(out, {t}, {});
  CHECK(out.str() == std::string(kTraceHeader) + "\n1.25,0.875,-0.125,0.5,0.125\n");
}

TEST_CASE("empty logs still carry the header") {
  std::ostringstream cmd, trace;
  write_command_log(cmd, {}, {});
  write_pose_trace(trace, {}, {});
  CHECK(cmd.str() == std::string(kCommandLogHeader) + "\n");
  CHECK(trace.str() == std::string(kTraceHeader) + "\n");
}

TEST_CASE("identical inputs produce byte-identical logs") {
  Rng rng(7);
  std::vector<CommandLogEntry> entries;
  for (int i = 0; i < 50; ++i) {
    CommandLogEntry e;
    e.seq = static_cast<std::uint64_t>(i);
    e.time_s = i * 0.25;
    e.yaw_rate = rng.uniform(-1.0, 1.0);
    e.lat_vel = rng.uniform(-0.3, 0.3);
    e.fwd_vel = 0.7;
    e.applied_w1 = rng.uniform();
    e.alpha = rng.uniform(-0.5, 0.5);
    e.latency_ms = rng.uniform(0.0, 5.0);
    entries.push_back(e);
  }
  std::ostringstream a, b;
  write_command_log(a, entries, {"run 1"});
  write_command_log(b, entries, {"run 1"});
  CHECK(a.str() == b.str());
}

}  // TEST_SUITE

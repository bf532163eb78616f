#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace trailnav {

/// One row of the command log CSV.
struct CommandLogEntry {
  std::uint64_t seq = 0;
  double time_s = 0.0;
  double yaw_rate = 0.0;
  double lat_vel = 0.0;
  double fwd_vel = 0.0;
  bool safety_stop = false;
  double applied_w1 = 0.0;
  double alpha = 0.0;
  double latency_ms = 0.0;
};

/// One row of the pose trace CSV.
struct TraceEntry {
  double time_s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
  double lat_dev = 0.0;
};

inline constexpr const char* kCommandLogHeader =
    "seq,time_s,yaw_rate,lat_vel,fwd_vel,safety_stop,applied_w1,alpha,latency_ms";
inline constexpr const char* kTraceHeader = "time_s,x,y,heading,lat_dev";

/// Shortest round-trippable decimal form of a double ("0.15", not
/// "0.1499999..."), used by every CSV writer so logs stay byte-stable.
std::string format_double(double value);

/// Each comment line is emitted as "# <line>" before the header row.
void write_command_log(std::ostream& out, const std::vector<CommandLogEntry>& entries,
                       const std::vector<std::string>& comments);
void write_command_log(const std::filesystem::path& path,
                       const std::vector<CommandLogEntry>& entries,
                       const std::vector<std::string>& comments);

void write_pose_trace(std::ostream& out, const std::vector<TraceEntry>& entries,
                      const std::vector<std::string>& comments);
void write_pose_trace(const std::filesystem::path& path, const std::vector<TraceEntry>& entries,
                      const std::vector<std::string>& comments);

}  // namespace trailnav

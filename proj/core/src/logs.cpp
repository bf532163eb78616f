#include "trailnav/logs.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "trailnav/errors.hpp"

namespace trailnav {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const auto& line : comments) out << "# " << line << '\n';
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

}  // namespace

void write_command_log(std::ostream& out, const std::vector<CommandLogEntry>& entries,
                       const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << kCommandLogHeader << '\n';
  for (const auto& e : entries) {
    out << e.seq << ',' << format_double(e.time_s) << ',' << format_double(e.yaw_rate) << ','
        << format_double(e.lat_vel) << ',' << format_double(e.fwd_vel) << ','
        << (e.safety_stop ? 1 : 0) << ',' << format_double(e.applied_w1) << ','
        << format_double(e.alpha) << ',' << format_double(e.latency_ms) << '\n';
  }
  if (!out) throw IoError("failed while writing command log");
}

void write_command_log(const std::filesystem::path& path,
                       const std::vector<CommandLogEntry>& entries,
                       const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_command_log(out, entries, comments);
}

void write_pose_trace(std::ostream& out, const std::vector<TraceEntry>& entries,
                      const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << kTraceHeader << '\n';
  for (const auto& e : entries) {
    out << format_double(e.time_s) << ',' << format_double(e.x) << ',' << format_double(e.y)
        << ',' << format_double(e.heading) << ',' << format_double(e.lat_dev) << '\n';
  }
  if (!out) throw IoError("failed while writing pose trace");
}

void write_pose_trace(const std::filesystem::path& path, const std::vector<TraceEntry>& entries,
                      const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_pose_trace(out, entries, comments);
}

}  // namespace trailnav

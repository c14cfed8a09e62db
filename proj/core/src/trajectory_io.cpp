#include "follownav/trajectory_io.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "follownav/agents.hpp"
#include "follownav/errors.hpp"
#include "follownav/io_util.hpp"
#include "follownav/kv.hpp"

namespace follownav {

namespace {

std::string line_tag(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

double parse_double_field(const std::string& text, std::size_t line_no, const char* what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError(line_tag(line_no) + "bad " + what + " '" + text + "'");
  }
  return value;
}

long parse_long_field(const std::string& text, std::size_t line_no, const char* what) {
  long value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw ParseError(line_tag(line_no) + "bad " + what + " '" + text + "'");
  }
  return value;
}

struct SourceTrack {
  AgentKind kind = AgentKind::Pedestrian;
  std::string label;
  std::vector<TrajectorySample> samples;  // frames strictly increasing, meters
};

// Linear interpolation of a source track at a fractional source frame.
// Queries must arrive in nondecreasing frame order; `cursor` carries the
// search position between calls so a whole resample pass stays linear.
Vec2 track_position(const SourceTrack& track, double frame, std::size_t& cursor) {
  const auto& s = track.samples;
  if (frame <= static_cast<double>(s.front().frame)) return s.front().position;
  if (frame >= static_cast<double>(s.back().frame)) return s.back().position;
  while (static_cast<double>(s[cursor].frame) <= frame) ++cursor;
  const auto& a = s[cursor - 1];
  const auto& b = s[cursor];
  // Exact frame hits return the stored sample bitwise; interpolating with
  // t = 0 (or 1) would still round once and drift by an ulp.
  if (frame == static_cast<double>(a.frame)) return a.position;
  const double span = static_cast<double>(b.frame - a.frame);
  const double t = (frame - static_cast<double>(a.frame)) / span;
  return a.position + (b.position - a.position) * t;
}

}  // namespace

TrajectoryLog ingest_trajectories(const std::string& text, double scale, double source_rate,
                                  double sim_rate, std::vector<std::string>* warnings) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ValidationError("scale must be positive");
  }
  if (!(source_rate > 0.0) || !std::isfinite(source_rate)) {
    throw ValidationError("source_rate must be positive");
  }
  if (!(sim_rate > 0.0) || !std::isfinite(sim_rate)) {
    throw ValidationError("sim_rate must be positive");
  }

  std::map<int, SourceTrack> tracks;
  std::set<std::string> warned_labels;
  auto warn = [&](const std::string& message) {
    if (warnings) warnings->push_back(message);
  };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    const auto fields = split_csv(line);
    if (!header_seen) {
      static const char* kExpected[5] = {"frame", "id", "kind", "x", "y"};
      if (fields.size() < 5) {
        throw ParseError(line_tag(line_no) + "expected header 'frame,id,kind,x,y'");
      }
      for (int i = 0; i < 5; ++i) {
        if (fields[i] != kExpected[i]) {
          throw ParseError(line_tag(line_no) + "expected column '" + kExpected[i] +
                           "', found '" + fields[i] + "'");
        }
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 5) {
      throw ParseError(line_tag(line_no) + "expected 5 columns, found " +
                       std::to_string(fields.size()));
    }
    const long frame = parse_long_field(fields[0], line_no, "frame");
    if (frame < 0) throw ParseError(line_tag(line_no) + "negative frame");
    const int id = static_cast<int>(parse_long_field(fields[1], line_no, "id"));
    bool approximate = false;
    const AgentKind kind = kind_from_label(fields[2], &approximate);
    if (approximate && warned_labels.insert(fields[2]).second) {
      warn("kind '" + fields[2] + "' is not an exact match; treating as " +
           std::string(to_string(kind)));
    }
    TrajectorySample sample;
    sample.frame = frame;
    sample.position = {parse_double_field(fields[3], line_no, "x") * scale,
                       parse_double_field(fields[4], line_no, "y") * scale};
    if (!is_finite(sample.position)) {
      throw ParseError(line_tag(line_no) + "non-finite position");
    }

    auto [it, inserted] = tracks.try_emplace(id);
    SourceTrack& track = it->second;
    if (inserted) {
      track.kind = kind;
      track.label = fields[2];
    } else {
      if (track.label != fields[2]) {
        throw ParseError(line_tag(line_no) + "agent " + std::to_string(id) +
                         " changes kind mid-file ('" + track.label + "' vs '" + fields[2] +
                         "')");
      }
      if (frame <= track.samples.back().frame) {
        throw ParseError(line_tag(line_no) + "frames for agent " + std::to_string(id) +
                         " must be strictly increasing");
      }
    }
    track.samples.push_back(sample);
  }
  if (!header_seen) throw ParseError("missing header 'frame,id,kind,x,y'");

  TrajectoryLog log(sim_rate);
  for (const auto& [id, track] : tracks) {
    const double t_first = static_cast<double>(track.samples.front().frame) / source_rate;
    const double t_last = static_cast<double>(track.samples.back().frame) / source_rate;
    const long k_first = static_cast<long>(std::ceil(t_first * sim_rate - 1e-9));
    const long k_last = static_cast<long>(std::floor(t_last * sim_rate + 1e-9));
    if (k_first > k_last) {
      warn("agent " + std::to_string(id) + " spans no full output frame; dropped");
      continue;
    }
    std::size_t cursor = 1;
    for (long k = k_first; k <= k_last; ++k) {
      const double source_frame = static_cast<double>(k) * source_rate / sim_rate;
      log.add_sample(id, track.kind, k, track_position(track, source_frame, cursor));
    }
  }
  return log;
}

TrajectoryLog ingest_trajectory_file(const std::filesystem::path& path, double scale,
                                     double source_rate, double sim_rate,
                                     std::vector<std::string>* warnings) {
  try {
    return ingest_trajectories(read_text_file(path), scale, source_rate, sim_rate, warnings);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_trajectories(const TrajectoryLog& log) {
  std::ostringstream out;
  out << "frame,id,kind,x,y\n";
  for (int id : log.agent_ids()) {
    const auto& samples = log.samples(id);
    const std::string kind = to_string(log.kind(id));
    for (const auto& sample : samples) {
      out << sample.frame << ',' << id << ',' << kind << ','
          << kv::format_double(sample.position.x) << ','
          << kv::format_double(sample.position.y) << "\n";
    }
  }
  return out.str();
}

}  // namespace follownav

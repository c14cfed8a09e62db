#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "follownav/trajectory.hpp"

namespace follownav {

// Reads a trajectory CSV (header `frame,id,kind,x,y`; columns past the
// fifth are ignored) recorded at `source_rate` Hz with positions in units
// of 1/scale meters (e.g. pixels), and returns a log resampled onto the
// `sim_rate` Hz frame grid by linear interpolation, positions in meters.
// Malformed rows and per-agent frame regressions fail with line numbers.
// Unrecognized kind labels fall back to bicycle; one warning per label
// (and per dropped degenerate track) is appended to `warnings` when given.
TrajectoryLog ingest_trajectories(const std::string& text, double scale, double source_rate,
                                  double sim_rate,
                                  std::vector<std::string>* warnings = nullptr);

TrajectoryLog ingest_trajectory_file(const std::filesystem::path& path, double scale,
                                     double source_rate, double sim_rate,
                                     std::vector<std::string>* warnings = nullptr);

// Writes the log back out in the same schema, meters, at the log's own
// frame rate; re-ingesting with scale 1 and source_rate = sim_rate =
// frame_rate() reproduces the log exactly.
std::string serialize_trajectories(const TrajectoryLog& log);

}  // namespace follownav

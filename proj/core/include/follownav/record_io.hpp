#pragma once

#include <filesystem>
#include <string>

#include "follownav/engine.hpp"

namespace follownav {

// CSV view of a run: `# key=value` metadata comments (mode, seed, dt,
// status), a header, then one row per tick per participant:
//
//   tick,agent_id,kind,x,y,vx,vy,is_robot,leader_id,subgoal_x,subgoal_y,collision_flag
//
// The robot appears first in every tick as agent_id -1, kind "robot",
// carrying the leader id (empty when none), the steering subgoal and the
// any-crowd-overlap flag; crowd rows follow in ascending id with their own
// overlap flag and the leader/subgoal fields empty. Planner internals that
// do not affect plots or metrics (chosen speed cap, wall-contact
// diagnostic) stay in-memory only.
std::string serialize_record(const RunRecord& record);

// Inverse of serialize_record. Ignores unknown metadata keys and any
// columns past the twelve above; malformed rows fail with their line
// number.
RunRecord parse_record(const std::string& text);
RunRecord load_record_file(const std::filesystem::path& path);

// Per-tick leader-selection score table (one row per scored candidate):
//
//   tick,agent_id,s_head,s_vel,s_pos,reach,reachable,total,selected
//
// `total` includes the incumbent bonus when it applied; recompute the raw
// weighted sum from the three component columns.
std::string serialize_scores(const RunRecord& record);

}  // namespace follownav

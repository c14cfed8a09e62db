#include "follownav/record_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "follownav/io_util.hpp"
#include "follownav/kv.hpp"

namespace follownav {

namespace {

constexpr const char* kHeader =
    "tick,agent_id,kind,x,y,vx,vy,is_robot,leader_id,subgoal_x,subgoal_y,collision_flag";
constexpr int kColumnCount = 12;

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

bool parse_flag_field(const std::string& text, std::size_t line_no, const char* what) {
  if (text == "0") return false;
  if (text == "1") return true;
  throw ParseError(line_tag(line_no) + "bad " + what + " '" + text + "' (want 0 or 1)");
}

AgentKind parse_kind_field(const std::string& text, std::size_t line_no) {
  if (text == "pedestrian") return AgentKind::Pedestrian;
  if (text == "bicycle") return AgentKind::Bicycle;
  if (text == "car") return AgentKind::Car;
  throw ParseError(line_tag(line_no) + "unknown kind '" + text + "'");
}

const char* status_name(RunStatus status) {
  return status == RunStatus::Reached ? "reached" : "timeout";
}

}  // namespace

std::string serialize_record(const RunRecord& record) {
  std::ostringstream out;
  out << "# mode=" << to_string(record.mode) << "\n";
  out << "# seed=" << record.seed << "\n";
  out << "# dt=" << kv::format_double(record.dt) << "\n";
  out << "# status=" << status_name(record.status) << "\n";
  out << kHeader << "\n";

  std::map<int, AgentKind> kinds;
  for (const auto& agent : record.agents) kinds[agent.id] = agent.kind;

  for (const auto& row : record.ticks) {
    out << row.tick << ",-1,robot," << kv::format_double(row.robot.position.x) << ','
        << kv::format_double(row.robot.position.y) << ','
        << kv::format_double(row.robot.velocity.x) << ','
        << kv::format_double(row.robot.velocity.y) << ",1,";
    if (row.leader_id) out << *row.leader_id;
    out << ',' << kv::format_double(row.subgoal.x) << ',' << kv::format_double(row.subgoal.y)
        << ',' << (row.robot_collision ? '1' : '0') << "\n";

    for (const auto& agent_row : row.agents) {
      auto it = kinds.find(agent_row.id);
      const AgentKind kind = it == kinds.end() ? AgentKind::Pedestrian : it->second;
      out << row.tick << ',' << agent_row.id << ',' << to_string(kind) << ','
          << kv::format_double(agent_row.state.position.x) << ','
          << kv::format_double(agent_row.state.position.y) << ','
          << kv::format_double(agent_row.state.velocity.x) << ','
          << kv::format_double(agent_row.state.velocity.y) << ",0,,,,"
          << (agent_row.colliding ? '1' : '0') << "\n";
    }
  }
  return out.str();
}

RunRecord parse_record(const std::string& text) {
  RunRecord record;
  record.dt = 1.0 / 30.0;

  std::map<int, AgentKind> kinds;  // ordered: becomes the registry
  bool header_seen = false;
  bool have_tick = false;
  bool robot_seen = false;
  TickRow current;

  auto close_tick = [&](std::size_t line_no) {
    if (!have_tick) return;
    if (!robot_seen) {
      throw ParseError(line_tag(line_no) + "tick " + std::to_string(current.tick) +
                       " has no robot row");
    }
    record.ticks.push_back(current);
  };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = body.substr(0, eq);
      const std::string value = body.substr(eq + 1);
      if (key == "mode") {
        auto mode = mode_from_string(value);
        if (!mode) throw ParseError(line_tag(line_no) + "unknown mode '" + value + "'");
        record.mode = *mode;
      } else if (key == "seed") {
        unsigned long long seed = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          throw ParseError(line_tag(line_no) + "bad seed '" + value + "'");
        }
        record.seed = seed;
      } else if (key == "dt") {
        record.dt = parse_double_field(value, line_no, "dt");
        if (!(record.dt > 0.0)) throw ParseError(line_tag(line_no) + "dt must be positive");
      } else if (key == "status") {
        if (value == "reached") record.status = RunStatus::Reached;
        else if (value == "timeout") record.status = RunStatus::Timeout;
        else throw ParseError(line_tag(line_no) + "unknown status '" + value + "'");
      }
      continue;
    }
    if (!header_seen) {
      const auto fields = split_csv(line);
      if (fields.size() < kColumnCount) {
        throw ParseError(line_tag(line_no) + "expected header '" + kHeader + "'");
      }
      const auto expected = split_csv(kHeader);
      for (int i = 0; i < kColumnCount; ++i) {
        if (fields[i] != expected[i]) {
          throw ParseError(line_tag(line_no) + "expected column '" + expected[i] +
                           "', found '" + fields[i] + "'");
        }
      }
      header_seen = true;
      continue;
    }

    const auto fields = split_csv(line);
    if (fields.size() < kColumnCount) {
      throw ParseError(line_tag(line_no) + "expected " + std::to_string(kColumnCount) +
                       " columns, found " + std::to_string(fields.size()));
    }
    const long tick = parse_long_field(fields[0], line_no, "tick");
    if (tick < 0) throw ParseError(line_tag(line_no) + "negative tick");
    if (!have_tick || tick != current.tick) {
      const long expected_tick = have_tick ? current.tick + 1 : 0;
      close_tick(line_no);
      if (tick != expected_tick) {
        throw ParseError(line_tag(line_no) + "expected tick " + std::to_string(expected_tick) +
                         ", found " + std::to_string(tick));
      }
      current = TickRow{};
      current.tick = tick;
      have_tick = true;
      robot_seen = false;
    }

    const bool is_robot = parse_flag_field(fields[7], line_no, "is_robot");
    AgentState state;
    state.position = {parse_double_field(fields[3], line_no, "x"),
                      parse_double_field(fields[4], line_no, "y")};
    state.velocity = {parse_double_field(fields[5], line_no, "vx"),
                      parse_double_field(fields[6], line_no, "vy")};

    if (is_robot) {
      if (robot_seen) throw ParseError(line_tag(line_no) + "duplicate robot row in tick");
      robot_seen = true;
      current.robot = state;
      if (!fields[8].empty()) {
        current.leader_id = static_cast<int>(parse_long_field(fields[8], line_no, "leader_id"));
      }
      current.subgoal = {parse_double_field(fields[9], line_no, "subgoal_x"),
                         parse_double_field(fields[10], line_no, "subgoal_y")};
      current.robot_collision = parse_flag_field(fields[11], line_no, "collision_flag");
    } else {
      TickAgentRow agent_row;
      agent_row.id = static_cast<int>(parse_long_field(fields[1], line_no, "agent_id"));
      const AgentKind kind = parse_kind_field(fields[2], line_no);
      auto [it, inserted] = kinds.try_emplace(agent_row.id, kind);
      if (!inserted && it->second != kind) {
        throw ParseError(line_tag(line_no) + "agent " + std::to_string(agent_row.id) +
                         " changes kind mid-record");
      }
      agent_row.state = state;
      agent_row.colliding = parse_flag_field(fields[11], line_no, "collision_flag");
      current.agents.push_back(agent_row);
    }
  }
  close_tick(line_no + 1);

  if (!header_seen) throw ParseError("missing header '" + std::string(kHeader) + "'");
  for (const auto& [id, kind] : kinds) {
    Agent agent;
    agent.id = id;
    agent.kind = kind;
    record.agents.push_back(agent);
  }
  return record;
}

RunRecord load_record_file(const std::filesystem::path& path) {
  return parse_record(read_text_file(path));
}

std::string serialize_scores(const RunRecord& record) {
  std::ostringstream out;
  out << "tick,agent_id,s_head,s_vel,s_pos,reach,reachable,total,selected\n";
  const std::size_t rows = std::min(record.score_history.size(), record.ticks.size());
  for (std::size_t t = 0; t < rows; ++t) {
    for (const auto& row : record.score_history[t]) {
      out << record.ticks[t].tick << ',' << row.id << ',' << kv::format_double(row.s_head)
          << ',' << kv::format_double(row.s_vel) << ',' << kv::format_double(row.s_pos) << ','
          << kv::format_double(row.reach) << ',' << (row.reachable ? '1' : '0') << ','
          << kv::format_double(row.total) << ',' << (row.selected ? '1' : '0') << "\n";
    }
  }
  return out.str();
}

}  // namespace follownav

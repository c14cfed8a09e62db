#pragma once

#include <vector>

#include "follownav/config.hpp"
#include "follownav/visibility.hpp"

namespace follownav {

// Partition of the crowd into social groups. Two agents link when they are
// both within tau_group_dis of each other and moving within tau_group_vel
// of each other; groups are the connected components of those links.
// Canonical form: members ascending, groups ordered by smallest member id,
// so the result is independent of crowd enumeration order.
struct GroupAssignment {
  std::vector<std::vector<int>> groups;  // every agent appears exactly once

  // Index into `groups` for an agent id, or -1 when the id is unknown.
  int group_of(int id) const;

  // Members of the group containing `id` (possibly just {id}).
  const std::vector<int>& members_of(int id) const;

  bool same_group(int a, int b) const;
};

GroupAssignment detect_groups(const Crowd& crowd, const FrameworkConfig& config);

}  // namespace follownav

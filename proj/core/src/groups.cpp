#include "follownav/groups.hpp"

#include <algorithm>
#include <numeric>

namespace follownav {

namespace {

// Union-find with path compression; tiny crowds, no ranking needed.
struct UnionFind {
  std::vector<size_t> parent;

  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

int GroupAssignment::group_of(int id) const {
  for (size_t g = 0; g < groups.size(); ++g)
    for (int member : groups[g])
      if (member == id) return static_cast<int>(g);
  return -1;
}

const std::vector<int>& GroupAssignment::members_of(int id) const {
  static const std::vector<int> empty;
  int g = group_of(id);
  return g < 0 ? empty : groups[static_cast<size_t>(g)];
}

bool GroupAssignment::same_group(int a, int b) const {
  int g = group_of(a);
  return g >= 0 && g == group_of(b);
}

GroupAssignment detect_groups(const Crowd& crowd, const FrameworkConfig& config) {
  size_t n = crowd.size();
  UnionFind uf(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool close = dist(crowd[i].state.position, crowd[j].state.position) <= config.tau_group_dis;
      bool paced = dist(crowd[i].state.velocity, crowd[j].state.velocity) <= config.tau_group_vel;
      if (close && paced) uf.unite(i, j);
    }
  }

  // Collect components, then canonicalize.
  std::vector<std::vector<int>> by_root(n);
  for (size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(crowd[i].agent.id);

  GroupAssignment out;
  for (auto& members : by_root) {
    if (members.empty()) continue;
    std::sort(members.begin(), members.end());
    out.groups.push_back(std::move(members));
  }
  std::sort(out.groups.begin(), out.groups.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return out;
}

}  // namespace follownav

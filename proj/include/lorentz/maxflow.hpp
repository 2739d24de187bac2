#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace lorentz {

/// Small integer max-flow network solved with shortest augmenting paths
/// (Edmonds-Karp). Sized for the bipartite transportation problems here.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kUnbounded = std::numeric_limits<Capacity>::max() / 4;

  explicit FlowNetwork(int num_nodes) : adjacency_(static_cast<std::size_t>(num_nodes)) {}

  /// Adds a directed arc and returns its id for later flow queries.
  int add_arc(int from, int to, Capacity capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    arcs_.push_back({from, 0, 0});
    adjacency_[static_cast<std::size_t>(from)].push_back(id);
    adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  Capacity max_flow(int source, int sink) {
    Capacity total = 0;
    const std::size_t n = adjacency_.size();
    std::vector<int> parent_arc(n);
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::queue<int> frontier;
      frontier.push(source);
      parent_arc[static_cast<std::size_t>(source)] = -2;
      while (!frontier.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
        const int v = frontier.front();
        frontier.pop();
        for (int id : adjacency_[static_cast<std::size_t>(v)]) {
          const Arc& a = arcs_[static_cast<std::size_t>(id)];
          if (a.capacity - a.flow > 0 && parent_arc[static_cast<std::size_t>(a.to)] == -1) {
            parent_arc[static_cast<std::size_t>(a.to)] = id;
            frontier.push(a.to);
          }
        }
      }
      if (parent_arc[static_cast<std::size_t>(sink)] == -1) return total;

      Capacity push = kUnbounded;
      for (int v = sink; v != source;) {
        const int id = parent_arc[static_cast<std::size_t>(v)];
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        push = std::min(push, a.capacity - a.flow);
        v = arcs_[static_cast<std::size_t>(id ^ 1)].to;
      }
      for (int v = sink; v != source;) {
        const int id = parent_arc[static_cast<std::size_t>(v)];
        arcs_[static_cast<std::size_t>(id)].flow += push;
        arcs_[static_cast<std::size_t>(id ^ 1)].flow -= push;
        v = arcs_[static_cast<std::size_t>(id ^ 1)].to;
      }
      total += push;
    }
  }

  Capacity flow(int arc_id) const { return arcs_[static_cast<std::size_t>(arc_id)].flow; }

 private:
  struct Arc {
    int to;
    Capacity capacity;
    Capacity flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace lorentz

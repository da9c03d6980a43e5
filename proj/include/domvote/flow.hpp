#pragma once

// Exact integer maximum flow (Dinic). Deterministic: the search visits
// edges in insertion order, so identical graphs always produce identical
// flows.

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace domvote {

class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(int vertex_count) : adjacency_(vertex_count) {
    if (vertex_count <= 0) throw std::invalid_argument("vertex count must be positive");
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }

  // Returns the id of the forward edge.
  int add_edge(int from, int to, long long capacity) {
    check_vertex(from);
    check_vertex(to);
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity});
    edges_.push_back({from, 0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    return id;
  }

  long long max_flow(int source, int sink) {
    check_vertex(source);
    check_vertex(sink);
    if (source == sink) throw std::invalid_argument("source equals sink");
    long long total = 0;
    while (build_levels(source, sink)) {
      iter_.assign(adjacency_.size(), 0);
      long long pushed;
      while ((pushed = push(source, sink, std::numeric_limits<long long>::max())) > 0)
        total += pushed;
    }
    return total;
  }

  // Flow currently on a forward edge (call after max_flow).
  long long flow_on(int edge_id) const { return edges_[edge_id ^ 1].capacity; }

 private:
  struct Edge {
    int to;
    long long capacity;  // residual
  };

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  }

  bool build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    level_[source] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int id : adjacency_[v]) {
        const Edge& e = edges_[id];
        if (e.capacity > 0 && level_[e.to] == -1) {
          level_[e.to] = level_[v] + 1;
          frontier.push(e.to);
        }
      }
    }
    return level_[sink] != -1;
  }

  long long push(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (std::size_t& i = iter_[v]; i < adjacency_[v].size(); ++i) {
      const int id = adjacency_[v][i];
      Edge& e = edges_[id];
      if (e.capacity <= 0 || level_[e.to] != level_[v] + 1) continue;
      const long long pushed = push(e.to, sink, std::min(limit, e.capacity));
      if (pushed > 0) {
        e.capacity -= pushed;
        edges_[id ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace domvote

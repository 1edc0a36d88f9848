#pragma once

// Shortest-augmenting-path (Edmonds-Karp) maximum flow on a dense network
// with real capacities.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "lovasz/error.hpp"

namespace lovasz::flow {

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();
inline constexpr double kResidualCutoff = 1e-10;

class Network {
 public:
  explicit Network(std::size_t nodes) : n_(nodes), cap_(nodes * nodes, 0.0), flow_(nodes * nodes, 0.0) {}

  std::size_t nodes() const noexcept { return n_; }
  void add_arc(std::size_t from, std::size_t to, double capacity) {
    if (from >= n_ || to >= n_ || from == to) throw InvalidArgument("flow network: bad arc");
    if (!(capacity >= 0)) throw InvalidArgument("flow network: negative capacity");
    cap_[from * n_ + to] += capacity;
  }
  double capacity(std::size_t from, std::size_t to) const { return cap_[from * n_ + to]; }
  /// Net flow along the arc from -> to after max_flow.
  double flow(std::size_t from, std::size_t to) const { return flow_[from * n_ + to]; }

  double max_flow(std::size_t s, std::size_t t) {
    if (s >= n_ || t >= n_ || s == t) throw InvalidArgument("flow network: bad terminals");
    std::fill(flow_.begin(), flow_.end(), 0.0);
    double total = 0;
    std::vector<std::size_t> parent(n_);
    while (true) {
      std::fill(parent.begin(), parent.end(), n_);
      parent[s] = s;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty() && parent[t] == n_) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n_; ++v)
          if (parent[v] == n_ && residual(u, v) > kResidualCutoff) {
            parent[v] = u;
            q.push(v);
          }
      }
      if (parent[t] == n_) break;
      double push = kInfinite;
      for (std::size_t v = t; v != s; v = parent[v]) push = std::min(push, residual(parent[v], v));
      if (push == kInfinite) throw SolverError("max_flow: unbounded augmenting path");
      for (std::size_t v = t; v != s; v = parent[v]) {
        flow_[parent[v] * n_ + v] += push;
        flow_[v * n_ + parent[v]] -= push;
      }
      total += push;
    }
    return total;
  }

  /// Nodes reachable from s in the final residual network (the source side of a min cut).
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v)
        if (!seen[v] && residual(u, v) > kResidualCutoff) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return seen;
  }

 private:
  double residual(std::size_t u, std::size_t v) const { return cap_[u * n_ + v] - flow_[u * n_ + v]; }

  std::size_t n_;
  std::vector<double> cap_, flow_;
};

}  // namespace lovasz::flow

#pragma once

// Brute-force reference values used as independent oracles in the tests.

#include <cstdint>
#include <vector>

#include "lovasz/graph.hpp"

namespace oracle {

using lovasz::Graph;
using lovasz::Vertex;

inline bool stable(const Graph& g, std::uint64_t s) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) return false;
  return true;
}

/// max over all 2^n subsets.
inline double alpha(const Graph& g, const std::vector<double>& w) {
  double best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (!stable(g, s)) continue;
    double t = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      if (s >> v & 1) t += w[v];
    best = std::max(best, t);
  }
  return best;
}

inline double alpha(const Graph& g) { return alpha(g, std::vector<double>(g.order(), 1.0)); }

inline double omega(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    bool clique = true;
    for (Vertex u = 0; u < g.order() && clique; ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) {
          clique = false;
          break;
        }
    if (clique) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return static_cast<double>(best);
}

/// Smallest k such that some assignment in k^n is proper (tiny n only).
inline std::size_t chromatic(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> c(n, 0);
    while (true) {
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (g.adjacent(u, v) && c[u] == c[v]) {
            ok = false;
            break;
          }
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

/// Does the vertex map p carry the edges of a onto the edges of b?
inline bool isomorphic_via(const Graph& a, const Graph& b, const std::vector<Vertex>& p) {
  if (a.order() != b.order() || p.size() != a.order()) return false;
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) return false;
  return true;
}

}  // namespace oracle

#pragma once

// Exponential-time exact quantities for small graphs: weighted stability and
// clique numbers, chromatic and clique-cover numbers, maximal cliques, the
// fractional clique-cover bound kappa, perfection, and STAB/QSTAB membership.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "lovasz/error.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/lp.hpp"

namespace lovasz::exact {

inline constexpr std::size_t kDefaultExactLimit = 30;
inline constexpr std::size_t kDefaultPerfectionLimit = 12;
inline constexpr std::size_t kMaxStableSets = 200000;

using Mask = std::uint64_t;
using VertexSet = std::vector<Vertex>;

struct Optimum {
  double value = 0;
  VertexSet witness;  // sorted
};

struct Coloring {
  std::size_t value = 0;
  std::vector<std::size_t> color;  // color[v] in [0, value)
};

struct CliqueCover {
  std::size_t value = 0;
  std::vector<VertexSet> cliques;
};

struct CliqueList {
  std::vector<VertexSet> cliques;
};

struct KappaResult {
  double value = 0;
  std::vector<double> x;
  std::vector<VertexSet> cliques;  // the maximal cliques used as constraints
  std::vector<double> clique_weights;  // LP dual: one per clique
};

struct Perfection {
  bool perfect = true;
  VertexSet witness;  // first induced subgraph with chi != omega, empty if perfect
};

namespace detail {

inline void check_limit(const char* what, const Graph& g, std::size_t limit) {
  if (g.order() > limit) throw SizeLimitError(what, g.order(), limit);
  if (g.order() > 64) throw SizeLimitError(what, g.order(), 64);
}

inline std::vector<Mask> masks(const Graph& g) {
  std::vector<Mask> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.neighbor_mask(v);
  return out;
}

inline VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

class StableSearch {
 public:
  StableSearch(const Graph& g, const WeightVector& w) : adj_(masks(g)), w_(w.values()) {
    scale_ = 1e-9 * (1.0 + w.sum());
  }

  Optimum run(std::size_t n) {
    best_ = -1;
    search(0, 0.0, full(n));
    return {best_, to_set(best_set_)};
  }

 private:
  // Sum over a greedy clique partition of the heaviest vertex in each clique;
  // a stable set meets every clique at most once.
  double bound(Mask cand) const {
    double total = 0;
    while (cand) {
      Mask avail = cand, cls = 0;
      double heaviest = 0;
      while (avail) {
        const int v = std::countr_zero(avail);
        cls |= Mask{1} << v;
        heaviest = std::max(heaviest, w_[static_cast<std::size_t>(v)]);
        avail &= adj_[static_cast<std::size_t>(v)];
      }
      total += heaviest;
      cand &= ~cls;
    }
    return total;
  }

  void search(Mask cur, double weight, Mask cand) {
    if (cand == 0) {
      if (weight > best_ + scale_) {
        best_ = weight;
        best_set_ = cur;
      }
      return;
    }
    if (weight + bound(cand) <= best_ + scale_) return;
    const int v = std::countr_zero(cand);
    const Mask bit = Mask{1} << v;
    search(cur | bit, weight + w_[static_cast<std::size_t>(v)], cand & ~bit & ~adj_[static_cast<std::size_t>(v)]);
    search(cur, weight, cand & ~bit);
  }

  std::vector<Mask> adj_;
  const std::vector<double>& w_;
  double scale_ = 0;
  double best_ = -1;
  Mask best_set_ = 0;
};

// DSATUR-ordered backtracking for a proper k-coloring.
class ColorSearch {
 public:
  explicit ColorSearch(const Graph& g) : g_(g), adj_(masks(g)) {}

  bool run(std::size_t k, std::vector<std::size_t>& color) {
    const std::size_t n = g_.order();
    color_.assign(n, kNone);
    k_ = k;
    if (!assign(0)) return false;
    color = color_;
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t done) {
    const std::size_t n = g_.order();
    if (done == n) return true;
    // Uncolored vertex with most distinct neighbor colors; ties by degree then index.
    std::size_t pick = n, best_sat = 0, best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color_[v] != kNone) continue;
      std::uint64_t seen = 0;
      for (Mask m = adj_[v]; m; m &= m - 1) {
        const std::size_t c = color_[static_cast<std::size_t>(std::countr_zero(m))];
        if (c != kNone) seen |= std::uint64_t{1} << c;
      }
      const std::size_t sat = static_cast<std::size_t>(std::popcount(seen));
      const std::size_t deg = static_cast<std::size_t>(std::popcount(adj_[v]));
      if (pick == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::size_t used = 0;
    for (Vertex v = 0; v < n; ++v)
      if (color_[v] != kNone) used = std::max(used, color_[v] + 1);
    for (std::size_t c = 0; c < std::min(k_, used + 1); ++c) {
      bool ok = true;
      for (Mask m = adj_[pick]; m; m &= m - 1)
        if (color_[static_cast<std::size_t>(std::countr_zero(m))] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[pick] = c;
      if (assign(done + 1)) return true;
      color_[pick] = kNone;
    }
    return false;
  }

  const Graph& g_;
  std::vector<Mask> adj_;
  std::vector<std::size_t> color_;
  std::size_t k_ = 0;
};

inline void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x, std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(to_set(r));
    return;
  }
  // Pivot: vertex of P u X with the most neighbors in P.
  int pivot = -1, most = -1;
  for (Mask m = p | x; m; m &= m - 1) {
    const int u = std::countr_zero(m);
    const int c = std::popcount(p & adj[static_cast<std::size_t>(u)]);
    if (c > most) {
      most = c;
      pivot = u;
    }
  }
  for (Mask m = p & ~adj[static_cast<std::size_t>(pivot)]; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask bit = Mask{1} << v;
    bron_kerbosch(adj, r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace detail

/// Maximum weight stable set; the witness is the lexicographically smallest optimum.
inline Optimum alpha(const Graph& g, const WeightVector& w, std::size_t limit = kDefaultExactLimit) {
  require_weights(g, w);
  detail::check_limit("alpha", g, limit);
  if (g.order() == 0) return {};
  return detail::StableSearch(g, w).run(g.order());
}

inline Optimum alpha(const Graph& g, std::size_t limit = kDefaultExactLimit) {
  return alpha(g, WeightVector::ones(g.order()), limit);
}

/// Maximum weight clique.
inline Optimum omega(const Graph& g, const WeightVector& w, std::size_t limit = kDefaultExactLimit) {
  require_weights(g, w);
  detail::check_limit("omega", g, limit);
  return alpha(complement(g), w, limit);
}

inline Optimum omega(const Graph& g, std::size_t limit = kDefaultExactLimit) {
  return omega(g, WeightVector::ones(g.order()), limit);
}

/// Smallest k admitting a proper coloring, searched upward from the clique number.
inline Coloring chromatic_number(const Graph& g, std::size_t limit = kDefaultExactLimit) {
  detail::check_limit("chromatic_number", g, limit);
  const std::size_t n = g.order();
  if (n == 0) return {};
  detail::ColorSearch search(g);
  std::vector<std::size_t> color;
  for (std::size_t k = static_cast<std::size_t>(std::lround(omega(g, limit).value)); k <= n; ++k)
    if (search.run(k, color)) return {k, color};
  throw SolverError("chromatic_number: no coloring with n colors");
}

/// Minimum partition of the vertices into cliques.
inline CliqueCover clique_cover_number(const Graph& g, std::size_t limit = kDefaultExactLimit) {
  detail::check_limit("clique_cover_number", g, limit);
  const Coloring c = chromatic_number(complement(g), limit);
  CliqueCover out{c.value, std::vector<VertexSet>(c.value)};
  for (Vertex v = 0; v < g.order(); ++v) out.cliques[c.color[v]].push_back(v);
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

/// All maximal cliques, each sorted, listed in lexicographic order.
inline CliqueList maximal_cliques(const Graph& g) {
  if (g.order() > 64) throw SizeLimitError("maximal_cliques", g.order(), 64);
  CliqueList out;
  if (g.order() == 0) return out;
  detail::bron_kerbosch(detail::masks(g), 0, detail::full(g.order()), 0, out.cliques);
  std::sort(out.cliques.begin(), out.cliques.end());
  return out;
}

/// max w.x over QSTAB(G): x >= 0 with every maximal-clique sum at most 1.
inline KappaResult kappa(const Graph& g, const WeightVector& w, std::size_t limit = kDefaultExactLimit) {
  require_weights(g, w);
  detail::check_limit("kappa", g, limit);
  KappaResult out;
  out.cliques = maximal_cliques(g).cliques;
  const std::size_t n = g.order();
  if (n == 0) return out;
  std::vector<std::vector<double>> a(out.cliques.size(), std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < out.cliques.size(); ++i)
    for (Vertex v : out.cliques[i]) a[i][v] = 1.0;
  const auto res = lp::lp_solve(w.values(), a, std::vector<double>(out.cliques.size(), 1.0));
  if (res.status != lp::Status::Optimal) throw SolverError("kappa: LP " + lp::to_string(res.status));
  out.value = res.optimum;
  out.x = res.solution;
  out.clique_weights = res.dual;
  return out;
}

inline KappaResult kappa(const Graph& g, std::size_t limit = kDefaultExactLimit) {
  return kappa(g, WeightVector::ones(g.order()), limit);
}

/// Checks chi = omega on every induced subgraph, subsets visited by size then
/// lexicographically; the first failure is the witness.
inline Perfection is_perfect(const Graph& g, std::size_t limit = kDefaultPerfectionLimit) {
  detail::check_limit("is_perfect", g, limit);
  const std::size_t n = g.order();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Vertex> sub(k);
    for (std::size_t i = 0; i < k; ++i) sub[i] = i;
    while (true) {
      const Graph h = induced(g, sub);
      if (chromatic_number(h, limit).value != static_cast<std::size_t>(std::lround(omega(h, limit).value)))
        return {false, sub};
      std::size_t i = k;
      while (i > 0 && sub[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++sub[i - 1];
      for (std::size_t j = i; j < k; ++j) sub[j] = sub[j - 1] + 1;
    }
  }
  return {true, {}};
}

/// Every nonempty stable set, as sorted vertex lists in lexicographic order.
inline std::vector<VertexSet> stable_sets(const Graph& g, std::size_t max_count = kMaxStableSets) {
  if (g.order() > 64) throw SizeLimitError("stable_sets", g.order(), 64);
  const auto adj = detail::masks(g);
  std::vector<VertexSet> out;
  VertexSet cur;
  auto rec = [&](auto&& self, Mask cand) -> void {
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      cur.push_back(static_cast<Vertex>(v));
      if (out.size() >= max_count) throw SizeLimitError("stable set count", out.size() + 1, max_count);
      out.push_back(cur);
      self(self, cand & ~adj[static_cast<std::size_t>(v)]);
      cur.pop_back();
    }
  };
  rec(rec, detail::full(g.order()));
  return out;
}

/// x in QSTAB(G): nonnegative with all maximal-clique sums at most 1 + 1e-9.
inline bool qstab_membership(const Graph& g, const std::vector<double>& x) {
  if (x.size() != g.order()) throw InvalidArgument("qstab_membership: vector length differs from vertex count");
  for (double v : x)
    if (!(v >= 0)) return false;
  for (const auto& q : maximal_cliques(g).cliques) {
    double s = 0;
    for (Vertex v : q) s += x[v];
    if (s > 1.0 + 1e-9) return false;
  }
  return true;
}

/// x in STAB(G): dominated by a convex combination of stable-set indicators
/// (STAB is down-closed), decided by an LP feasibility problem.
inline bool stab_membership(const Graph& g, const std::vector<double>& x, std::size_t limit = kDefaultExactLimit) {
  if (x.size() != g.order()) throw InvalidArgument("stab_membership: vector length differs from vertex count");
  detail::check_limit("stab_membership", g, limit);
  for (double v : x)
    if (!(v >= 0)) return false;
  const std::size_t n = g.order();
  if (n == 0) return true;
  const auto sets = stable_sets(g);
  std::vector<std::vector<double>> a(n + 1, std::vector<double>(sets.size(), 0.0));
  std::vector<double> b(n + 1);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (Vertex v : sets[s]) a[v][s] = -1.0;
    a[n][s] = 1.0;
  }
  for (Vertex v = 0; v < n; ++v) b[v] = -x[v] + 1e-9;
  b[n] = 1.0 + 1e-9;
  const auto res = lp::lp_solve(std::vector<double>(sets.size(), 0.0), a, b);
  if (res.status == lp::Status::Optimal) return true;
  if (res.status == lp::Status::Infeasible) return false;
  throw SolverError("stab_membership: LP " + lp::to_string(res.status));
}

/// Stable-set indicator vector.
inline std::vector<double> indicator(std::size_t n, const VertexSet& s) {
  std::vector<double> x(n, 0.0);
  for (Vertex v : s) x.at(v) = 1.0;
  return x;
}

}  // namespace lovasz::exact

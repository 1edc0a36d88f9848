#pragma once

// Simple undirected graphs, vertex weights, the graph operations used by the
// theta machinery (sums, products, splitting, blow-ups), generators for the
// standard families, and the DIMACS-style edge-list file format.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lovasz/error.hpp"

namespace lovasz {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// Structural provenance recorded by generators and combinators. Used only to
/// look up closed-form theta values; never consulted for adjacency.
enum class Family {
  Complete,
  Empty,
  Cycle,
  Path,
  Kneser,  // P(m, t, q)
  CompleteBipartite,
  Complement,
  DirectSum,
  DirectCosum,
  StrongProduct,
  Coproduct,
};

struct FamilyTag {
  Family kind;
  std::vector<long> params;
  std::shared_ptr<const Graph> first;
  std::shared_ptr<const Graph> second;
};

/// Dense symmetric, irreflexive adjacency stored as one bit row per vertex.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) connect(u, v);
  }

  std::size_t order() const noexcept { return n_; }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
      if (adjacent_unchecked(v, u)) out.push_back(u);
    return out;
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t k = 0; k < words_; ++k) d += std::popcount(bits_[v * words_ + k]);
    return d;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adjacent_unchecked(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// Common degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const {
    if (n_ == 0) return 0;
    const std::size_t r = degree(0);
    for (Vertex v = 1; v < n_; ++v)
      if (degree(v) != r) return std::nullopt;
    return r;
  }

  /// Neighbourhood of v as a 64-bit mask. Only valid for n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const {
    if (n_ > 64) throw InvalidArgument("neighbor_mask requires n <= 64");
    check_vertex(v);
    return bits_[v * words_];
  }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const FamilyTag* family() const noexcept { return tag_.get(); }

  /// Copy with one extra edge.
  Graph with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.connect(u, v);
    g.tag_.reset();
    return g;
  }

  Graph with_family(FamilyTag tag) const {
    Graph g = *this;
    g.tag_ = std::make_shared<const FamilyTag>(std::move(tag));
    return g;
  }

  Graph with_names(std::vector<std::string> names) const {
    if (!names.empty() && names.size() != n_) throw InvalidArgument("vertex name count differs from n");
    Graph g = *this;
    g.names_ = std::move(names);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const {
    if (v >= n_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
  }

  bool adjacent_unchecked(Vertex u, Vertex v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U; }

  void connect(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> names_;
  std::shared_ptr<const FamilyTag> tag_;
};

/// Accumulates edges, then hands out an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    g_.connect(u, v);
    return *this;
  }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

/// Nonnegative real label per vertex.
class WeightVector {
 public:
  WeightVector() = default;

  explicit WeightVector(std::vector<double> entries) : w_(std::move(entries)) {
    for (std::size_t v = 0; v < w_.size(); ++v)
      if (!(w_[v] >= 0.0) || !std::isfinite(w_[v]))
        throw InvalidArgument("weight of vertex " + std::to_string(v) + " must be finite and >= 0, got " +
                              std::to_string(w_[v]));
  }

  static WeightVector ones(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t v) const { return w_[v]; }
  const std::vector<double>& values() const noexcept { return w_; }
  auto begin() const noexcept { return w_.begin(); }
  auto end() const noexcept { return w_.end(); }

  double sum() const { return std::accumulate(w_.begin(), w_.end(), 0.0); }
  double max() const { return w_.empty() ? 0.0 : *std::max_element(w_.begin(), w_.end()); }
  bool is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](double x) { return x == 0.0; });
  }
  bool all_ones() const {
    return std::all_of(w_.begin(), w_.end(), [](double x) { return x == 1.0; });
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> w_;
};

inline void require_weights(const Graph& g, const WeightVector& w) {
  if (w.size() != g.order())
    throw InvalidArgument("weight vector has " + std::to_string(w.size()) + " entries for a graph on " +
                          std::to_string(g.order()) + " vertices");
}

// ---------------------------------------------------------------------------
// Operations

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  Graph out = std::move(b).build().with_names(g.names());
  if (const FamilyTag* t = g.family(); t && t->kind == Family::Complement)
    return t->first->family() ? out.with_family(*t->first->family()) : out;
  return out.with_family({Family::Complement, {}, std::make_shared<const Graph>(g), nullptr});
}

/// Subgraph induced by `subset`; vertex i of the result is subset[i].
inline Graph induced(const Graph& g, std::span<const Vertex> subset) {
  for (Vertex v : subset)
    if (v >= g.order()) throw InvalidArgument("induced: vertex " + std::to_string(v) + " out of range");
  GraphBuilder b(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] == subset[j]) throw InvalidArgument("induced: repeated vertex " + std::to_string(subset[i]));
      if (g.adjacent(subset[i], subset[j])) b.add_edge(i, j);
    }
  std::vector<std::string> names;
  if (!g.names().empty())
    for (Vertex v : subset) names.push_back(g.names()[v]);
  return std::move(b).build().with_names(std::move(names));
}

/// Disjoint union; vertices of g2 follow those of g1.
inline Graph direct_sum(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  return std::move(b).build().with_family(
      {Family::DirectSum, {}, std::make_shared<const Graph>(g1), std::make_shared<const Graph>(g2)});
}

/// Disjoint union plus every cross edge.
inline Graph direct_cosum(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  GraphBuilder b(n1 + n2);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  return std::move(b).build().with_family(
      {Family::DirectCosum, {}, std::make_shared<const Graph>(g1), std::make_shared<const Graph>(g2)});
}

/// Index of product vertex (u1, u2).
inline Vertex product_index(Vertex u1, Vertex u2, std::size_t n2) { return u1 * n2 + u2; }

/// Strong product: distinct pairs adjacent iff each coordinate is equal or adjacent.
inline Graph strong_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  auto close = [](const Graph& g, Vertex a, Vertex b) { return a == b || g.adjacent(a, b); };
  GraphBuilder b(n1 * n2);
  for (Vertex a1 = 0; a1 < n1; ++a1)
    for (Vertex a2 = 0; a2 < n2; ++a2)
      for (Vertex b1 = 0; b1 < n1; ++b1)
        for (Vertex b2 = 0; b2 < n2; ++b2) {
          const Vertex p = product_index(a1, a2, n2), q = product_index(b1, b2, n2);
          if (p < q && close(g1, a1, b1) && close(g2, a2, b2)) b.add_edge(p, q);
        }
  return std::move(b).build().with_family(
      {Family::StrongProduct, {}, std::make_shared<const Graph>(g1), std::make_shared<const Graph>(g2)});
}

/// Coproduct: distinct pairs adjacent iff some coordinate is distinct and adjacent.
inline Graph coproduct(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  GraphBuilder b(n1 * n2);
  for (Vertex a1 = 0; a1 < n1; ++a1)
    for (Vertex a2 = 0; a2 < n2; ++a2)
      for (Vertex b1 = 0; b1 < n1; ++b1)
        for (Vertex b2 = 0; b2 < n2; ++b2) {
          const Vertex p = product_index(a1, a2, n2), q = product_index(b1, b2, n2);
          if (p < q && ((a1 != b1 && g1.adjacent(a1, b1)) || (a2 != b2 && g2.adjacent(a2, b2)))) b.add_edge(p, q);
        }
  return std::move(b).build().with_family(
      {Family::Coproduct, {}, std::make_shared<const Graph>(g1), std::make_shared<const Graph>(g2)});
}

/// Adds vertex n (a copy of v) adjacent to exactly v's neighbours, not to v.
inline Graph split_vertex(const Graph& g, Vertex v) {
  const std::size_t n = g.order();
  if (v >= n) throw InvalidArgument("split_vertex: vertex " + std::to_string(v) + " out of range");
  GraphBuilder b(n + 1);
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  for (Vertex u : g.neighbors(v)) b.add_edge(u, n);
  return std::move(b).build();
}

/// As split_vertex, plus the edge v -- v'.
inline Graph duplicate_vertex(const Graph& g, Vertex v) {
  const std::size_t n = g.order();
  if (v >= n) throw InvalidArgument("duplicate_vertex: vertex " + std::to_string(v) + " out of range");
  GraphBuilder b(n + 1);
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  for (Vertex u : g.neighbors(v)) b.add_edge(u, n);
  b.add_edge(v, n);
  return std::move(b).build();
}

/// Replaces each vertex v by mult[v] pairwise nonadjacent clones; clones of v
/// occupy a contiguous block, blocks in vertex order.
inline Graph blow_up(const Graph& g, std::span<const std::size_t> mult) {
  if (mult.size() != g.order()) throw InvalidArgument("blow_up: multiplicity count differs from n");
  std::vector<std::size_t> start(g.order() + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mult[v] == 0) throw InvalidArgument("blow_up: multiplicity of vertex " + std::to_string(v) + " is zero");
    start[v + 1] = start[v] + mult[v];
  }
  GraphBuilder b(start.back());
  for (auto [u, v] : g.edges())
    for (std::size_t i = start[u]; i < start[u + 1]; ++i)
      for (std::size_t j = start[v]; j < start[v + 1]; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Generators

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build().with_family({Family::Complete, {static_cast<long>(n)}, nullptr, nullptr});
}

inline Graph empty_graph(std::size_t n) {
  return Graph(n).with_family({Family::Empty, {static_cast<long>(n)}, nullptr, nullptr});
}

/// C_n: u -- v iff u - v = +-1 (mod n). Requires n >= 3.
inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build().with_family({Family::Cycle, {static_cast<long>(n)}, nullptr, nullptr});
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build().with_family({Family::Path, {static_cast<long>(n)}, nullptr, nullptr});
}

inline Graph complete_bipartite(std::size_t a, std::size_t c) {
  GraphBuilder b(a + c);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < c; ++v) b.add_edge(u, a + v);
  return std::move(b).build().with_family(
      {Family::CompleteBipartite, {static_cast<long>(a), static_cast<long>(c)}, nullptr, nullptr});
}

/// t-subsets of {1..m} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int m, int t) {
  std::vector<std::vector<int>> out;
  if (t < 0 || t > m) return out;
  std::vector<int> cur(static_cast<std::size_t>(t));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - t + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// P(m, t, q): t-subsets of an m-set, adjacent iff they share exactly q elements.
inline Graph kneser_type(int m, int t, int q) {
  if (!(0 <= q && q < t && m >= 2 * t - q)) throw InvalidArgument("P(m,t,q) needs 0 <= q < t and m >= 2t - q");
  const auto sets = k_subsets(m, t);
  GraphBuilder b(sets.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string name;
    for (int e : sets[i]) name += (name.empty() || m < 10 ? "" : ",") + std::to_string(e);
    names.push_back(name);
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == q) b.add_edge(i, j);
    }
  }
  return std::move(b).build().with_names(std::move(names)).with_family({Family::Kneser, {m, t, q}, nullptr, nullptr});
}

inline Graph petersen_graph() { return kneser_type(5, 2, 0); }

/// splitmix64; fixed across platforms, unlike the std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// G(n, p) with every edge drawn independently, pairs visited in (u, v), u < v order.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) b.add_edge(u, v);
  return std::move(b).build();
}

/// Named family with numeric parameters. Families: complete n, empty n,
/// cycle n, path n, petersen, kneser m t q, bipartite a b, gnp n p.
inline Graph generate(std::string_view family, std::span<const double> params, std::uint64_t seed = 0) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidArgument(std::string(family) + " expects " + std::to_string(k) + " parameter(s)");
  };
  auto count = [&](std::size_t i) {
    const double x = params[i];
    if (!(x >= 0) || x != std::floor(x) || x > 1e6)
      throw InvalidArgument(std::string(family) + ": parameter " + std::to_string(i + 1) + " must be a count");
    return static_cast<std::size_t>(x);
  };
  if (family == "complete") return need(1), complete_graph(count(0));
  if (family == "empty") return need(1), empty_graph(count(0));
  if (family == "cycle") return need(1), cycle_graph(count(0));
  if (family == "path") return need(1), path_graph(count(0));
  if (family == "petersen") return need(0), petersen_graph();
  if (family == "kneser" || family == "P")
    return need(3), kneser_type(static_cast<int>(count(0)), static_cast<int>(count(1)), static_cast<int>(count(2)));
  if (family == "bipartite") return need(2), complete_bipartite(count(0), count(1));
  if (family == "gnp") return need(2), random_gnp(count(0), params[1], seed);
  throw InvalidArgument("unknown graph family '" + std::string(family) + "'");
}

/// Parses "family:p1,p2,..." (e.g. "cycle:5", "kneser:5,2,0", "petersen").
inline Graph generate(std::string_view spec, std::uint64_t seed = 0) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double x = 0;
      try {
        x = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw InvalidArgument("bad generator parameter '" + item + "'");
      params.push_back(x);
    }
  }
  return generate(family, params, seed);
}

// ---------------------------------------------------------------------------
// File formats

/// Edge-list text: "c ..." comments, one "p edge <n> <m>" header, m lines
/// "e <u> <v>" with 1-based endpoints.
inline Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<GraphBuilder> builder;
  std::size_t n = 0, m = 0, seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nn = -1, mm = -1;
      if (builder) throw ParseError(lineno, "duplicate header");
      if (!(ls >> kind >> nn >> mm) || kind != "edge" || nn < 0 || mm < 0)
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing text after header");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      builder.emplace(n);
    } else if (tag == "e") {
      if (!builder) throw ParseError(lineno, "edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing text after edge");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
      if (builder->adjacent(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        throw ParseError(lineno, "duplicate edge");
      builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      ++seen;
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!builder) throw ParseError(0, "missing 'p edge' header");
  if (seen != m) throw ParseError(0, "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return std::move(*builder).build();
}

/// Canonical form: header then edges sorted with u < v.
inline std::string serialize_graph(const Graph& g) {
  const auto es = g.edges();
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(es.size()) + "\n";
  for (auto [u, v] : es) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

/// One decimal real per non-blank line, in vertex order.
inline WeightVector parse_weights(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<double> w;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    std::string extra;
    if (used != tok.size() || (ls >> extra)) throw ParseError(lineno, "expected one real number");
    if (!(x >= 0.0) || !std::isfinite(x)) throw ParseError(lineno, "weight must be finite and >= 0");
    w.push_back(x);
  }
  if (w.size() != n) throw ParseError(0, "expected " + std::to_string(n) + " weights, found " + std::to_string(w.size()));
  return WeightVector(std::move(w));
}

inline std::string serialize_weights(const WeightVector& w) {
  std::string out;
  char buf[64];
  for (double x : w) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    out += buf;
  }
  return out;
}

}  // namespace lovasz

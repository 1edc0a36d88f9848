#include <gtest/gtest.h>

#include "lovasz/exact.hpp"
#include "lovasz/graph.hpp"
#include "oracles.hpp"

using namespace lovasz;
using namespace lovasz::exact;

namespace {

std::vector<Graph> corpus() {
  std::vector<Graph> out{cycle_graph(5), cycle_graph(6), cycle_graph(7), petersen_graph(), complete_graph(4),
                         empty_graph(4), path_graph(6), complete_bipartite(2, 3)};
  for (std::uint64_t seed = 1; seed <= 24; ++seed)
    out.push_back(random_gnp(5 + seed % 6, 0.3 + 0.1 * static_cast<double>(seed % 5), seed));
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(cycle_graph(5)).value, 2);
  EXPECT_EQ(alpha(petersen_graph()).value, 4);
  EXPECT_EQ(alpha(empty_graph(7)).value, 7);
  EXPECT_EQ(alpha(Graph(0)).value, 0);
}

TEST(Alpha, WitnessIsLexicographicallySmallest) {
  EXPECT_EQ(alpha(cycle_graph(5)).witness, (VertexSet{0, 2}));
  EXPECT_EQ(alpha(cycle_graph(6)).witness, (VertexSet{0, 2, 4}));
}

TEST(Alpha, MatchesOracleWeighted) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_gnp(10, 0.4, seed);
    SplitMix64 rng(seed + 100);
    std::vector<double> w(10);
    for (auto& x : w) x = std::floor(rng.uniform() * 8) / 2;
    const auto r = alpha(g, WeightVector(w));
    EXPECT_DOUBLE_EQ(r.value, oracle::alpha(g, w));
    std::uint64_t mask = 0;
    double sum = 0;
    for (Vertex v : r.witness) mask |= std::uint64_t{1} << v, sum += w[v];
    EXPECT_TRUE(oracle::stable(g, mask));
    EXPECT_DOUBLE_EQ(sum, r.value);
  }
}

TEST(Alpha, SizeLimit) { EXPECT_THROW(alpha(cycle_graph(12), 10), SizeLimitError); }

TEST(Omega, Examples) {
  EXPECT_EQ(omega(petersen_graph()).value, 2);
  EXPECT_EQ(omega(complete_graph(6)).value, 6);
  EXPECT_EQ(omega(cycle_graph(7)).value, oracle::omega(cycle_graph(7)));
  EXPECT_EQ(omega(cycle_graph(7)).value, 2);
}

TEST(Omega, IsAlphaOfComplementOnCorpus) {
  for (const auto& g : corpus()) {
    EXPECT_EQ(omega(g).value, alpha(complement(g)).value);
    EXPECT_EQ(omega(g).value, oracle::omega(g));
    EXPECT_TRUE(is_clique(g, omega(g).witness));
  }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)).value, 3);
  EXPECT_EQ(chromatic_number(empty_graph(6)).value, 1);
  EXPECT_EQ(chromatic_number(petersen_graph()).value, 3);
  EXPECT_EQ(chromatic_number(Graph(0)).value, 0);
}

TEST(Chromatic, ColoringIsProperAndMatchesOracle) {
  for (const auto& g : corpus()) {
    if (g.order() > 8) continue;
    const auto c = chromatic_number(g);
    EXPECT_EQ(c.value, oracle::chromatic(g));
    for (auto [u, v] : g.edges()) EXPECT_NE(c.color[u], c.color[v]);
    for (auto x : c.color) EXPECT_LT(x, c.value);
  }
}

TEST(CliqueCover, Examples) {
  EXPECT_EQ(clique_cover_number(cycle_graph(5)).value, 3);
  EXPECT_EQ(clique_cover_number(complete_graph(5)).value, 1);
  EXPECT_EQ(clique_cover_number(cycle_graph(6)).value, 3);
}

TEST(CliqueCover, PartitionIntoCliques) {
  for (const auto& g : corpus()) {
    const auto c = clique_cover_number(g);
    EXPECT_EQ(c.value, chromatic_number(complement(g)).value);
    EXPECT_EQ(c.cliques.size(), c.value);
    std::vector<int> seen(g.order(), 0);
    for (const auto& q : c.cliques) {
      EXPECT_TRUE(is_clique(g, q));
      for (Vertex v : q) ++seen[v];
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(MaximalCliques, Examples) {
  const auto c5 = maximal_cliques(cycle_graph(5)).cliques;
  EXPECT_EQ(c5, (std::vector<VertexSet>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(maximal_cliques(complete_graph(4)).cliques, (std::vector<VertexSet>{{0, 1, 2, 3}}));
  const Graph p = petersen_graph();
  EXPECT_EQ(oracle::omega(p), 2);
  EXPECT_EQ(maximal_cliques(p).cliques.size(), 15u);
}

TEST(MaximalCliques, ExactlyTheMaximalOnes) {
  for (const auto& g : corpus()) {
    if (g.order() > 10) continue;
    const auto list = maximal_cliques(g).cliques;
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    std::size_t count = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
      VertexSet set;
      for (Vertex v = 0; v < g.order(); ++v)
        if (s >> v & 1) set.push_back(v);
      if (!is_clique(g, set)) continue;
      bool maximal = true;
      for (Vertex v = 0; v < g.order() && maximal; ++v) {
        if (s >> v & 1) continue;
        bool ext = true;
        for (Vertex u : set) ext = ext && g.adjacent(u, v);
        if (ext) maximal = false;
      }
      if (!maximal) continue;
      ++count;
      EXPECT_NE(std::find(list.begin(), list.end(), set), list.end());
    }
    EXPECT_EQ(count, list.size());
  }
}

TEST(Kappa, Examples) {
  const auto c5 = kappa(cycle_graph(5));
  EXPECT_NEAR(c5.value, 2.5, 1e-9);
  for (double x : c5.x) EXPECT_NEAR(x, 0.5, 1e-9);
  EXPECT_NEAR(kappa(complete_graph(6)).value, 1, 1e-9);
  EXPECT_NEAR(kappa(petersen_graph()).value, 5, 1e-9);
}

TEST(Kappa, OddCyclesHalfN) {
  for (std::size_t n = 4; n <= 11; ++n) EXPECT_NEAR(kappa(cycle_graph(n)).value, n / 2.0, 1e-9) << n;
}

TEST(Kappa, DualIsFractionalCliqueCover) {
  for (const auto& g : corpus()) {
    const auto k = kappa(g);
    double total = 0;
    std::vector<double> cover(g.order(), 0.0);
    for (std::size_t i = 0; i < k.cliques.size(); ++i) {
      total += k.clique_weights[i];
      for (Vertex v : k.cliques[i]) cover[v] += k.clique_weights[i];
    }
    EXPECT_NEAR(total, k.value, 1e-8);
    for (double c : cover) EXPECT_GE(c, 1 - 1e-9);
  }
}

TEST(Sandwich, AlphaKappaCover) {
  for (const auto& g : corpus()) {
    const double a = alpha(g).value, k = kappa(g).value;
    const double c = static_cast<double>(clique_cover_number(g).value);
    EXPECT_LE(a, k + 1e-9);
    EXPECT_LE(k, c + 1e-9);
  }
}

TEST(Perfection, Examples) {
  const auto c5 = is_perfect(cycle_graph(5));
  EXPECT_FALSE(c5.perfect);
  EXPECT_EQ(c5.witness, (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_perfect(cycle_graph(6)).perfect);
  EXPECT_TRUE(is_perfect(complete_graph(5)).perfect);
  EXPECT_FALSE(is_perfect(cycle_graph(7)).perfect);
  EXPECT_FALSE(is_perfect(complement(cycle_graph(7))).perfect);
}

TEST(Perfection, ComplementInvariantOnCorpus) {
  for (const auto& g : corpus()) {
    if (g.order() > 10) continue;
    EXPECT_EQ(is_perfect(g).perfect, is_perfect(complement(g)).perfect);
  }
}

TEST(Perfection, DuplicationPreserves) {
  for (const auto& g : corpus()) {
    if (g.order() > 9 || !is_perfect(g).perfect) continue;
    for (Vertex v = 0; v < g.order(); v += 3) EXPECT_TRUE(is_perfect(duplicate_vertex(g, v)).perfect);
  }
}

TEST(Perfection, WitnessViolates) {
  const Graph g = direct_sum(cycle_graph(5), complete_graph(2));
  const auto p = is_perfect(g);
  ASSERT_FALSE(p.perfect);
  const Graph h = induced(g, p.witness);
  EXPECT_NE(oracle::chromatic(h), static_cast<std::size_t>(oracle::omega(h)));
}

TEST(Perfection, SizeLimit) { EXPECT_THROW(is_perfect(cycle_graph(13)), SizeLimitError); }

TEST(Stab, Membership) {
  const Graph c5 = cycle_graph(5);
  const std::vector<double> half(5, 0.5);
  EXPECT_TRUE(qstab_membership(c5, half));
  EXPECT_FALSE(stab_membership(c5, half));
  for (const auto& s : stable_sets(c5)) {
    EXPECT_TRUE(qstab_membership(c5, indicator(5, s)));
    EXPECT_TRUE(stab_membership(c5, indicator(5, s)));
  }
  const std::vector<double> neg{0.5, -0.1, 0, 0, 0};
  EXPECT_FALSE(qstab_membership(c5, neg));
  EXPECT_FALSE(stab_membership(c5, neg));
  // Two fifths everywhere sums to 2 and lies in STAB.
  EXPECT_TRUE(stab_membership(c5, std::vector<double>(5, 0.4)));
}

TEST(Stab, EnumerationMatchesOracle) {
  for (const auto& g : corpus()) {
    if (g.order() > 10) continue;
    std::size_t count = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) count += oracle::stable(g, s);
    EXPECT_EQ(stable_sets(g).size(), count);
  }
}

#include <gtest/gtest.h>

#include <numbers>

#include "golden.hpp"
#include "lovasz/certificates.hpp"
#include "lovasz/exact.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/labelings.hpp"
#include "oracles.hpp"

using namespace lovasz;

namespace {

const double kSqrt5 = std::sqrt(5.0);

OrthogonalLabeling from_columns(std::initializer_list<std::initializer_list<double>> cols) {
  const auto n = static_cast<Eigen::Index>(cols.size());
  const auto d = static_cast<Eigen::Index>(cols.begin()->size());
  OrthogonalLabeling l;
  l.vectors = Matrix(d, n);
  Eigen::Index c = 0;
  for (const auto& col : cols) {
    Eigen::Index r = 0;
    for (double x : col) l.vectors(r++, c) = x;
    ++c;
  }
  return l;
}

/// Rescale each a_v so that a_1v = sqrt(w_v); then |a_v|^2 = theta when c(a_v) = w_v / theta.
OrthogonalLabeling standard_form(OrthogonalLabeling a, const WeightVector& w) {
  for (Eigen::Index v = 0; v < a.vectors.cols(); ++v) a.vectors.col(v) *= std::sqrt(w[static_cast<std::size_t>(v)]) / a.vectors(0, v);
  return a;
}

/// Random labeling valid for h: each a_v is a random vector projected onto
/// the orthogonal complement of the earlier vectors it must be orthogonal to.
OrthogonalLabeling random_labeling(const Graph& h, std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(h.order());
  SplitMix64 rng(seed);
  OrthogonalLabeling l;
  l.vectors = Matrix::Zero(n, n);
  for (Eigen::Index v = 0; v < n; ++v) {
    Vector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = rng.uniform() - 0.5;
    std::vector<Eigen::Index> prev;
    for (Eigen::Index u = 0; u < v; ++u)
      if (!h.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) prev.push_back(u);
    if (!prev.empty()) {
      Matrix p(n, static_cast<Eigen::Index>(prev.size()));
      for (std::size_t k = 0; k < prev.size(); ++k) p.col(static_cast<Eigen::Index>(k)) = l.vectors.col(prev[k]);
      Eigen::ColPivHouseholderQR<Matrix> qr(p);
      const Matrix q = qr.householderQ();
      const Eigen::Index r = qr.rank();
      for (Eigen::Index k = 0; k < r; ++k) x -= q.col(k).dot(x) * q.col(k);
    }
    l.vectors.col(v) = x;
  }
  return l;
}

Report pair_report(const LabelingPair& p, const Graph& g, const WeightVector& w) {
  return verify_theorem13(p.a, p.b, g, w, p.theta, 1e-9);
}

}  // namespace

TEST(Cost, Examples) {
  EXPECT_EQ(cost(Vector::Unit(3, 0)), 1.0);
  EXPECT_DOUBLE_EQ(cost((Vector(2) << 1, 1).finished()), 0.5);
  EXPECT_EQ(cost(Vector::Zero(3)), 0.0);
  const double c = std::cos(std::numbers::pi / 5);
  for (double x : cost(build_cycle_labelings(5).b)) EXPECT_NEAR(x, c / (1 + c), 1e-12);
}

TEST(Validate, Examples) {
  const Graph c5 = cycle_graph(5);
  OrthogonalLabeling zero{Matrix::Zero(2, 5)};
  EXPECT_TRUE(validate(zero, c5).empty());
  // Characteristic vector of the clique {1, 2} in dimension 1.
  EXPECT_TRUE(validate(from_columns({{0}, {1}, {1}, {0}, {0}}), c5).empty());
  const auto basis = from_columns({{1, 0}, {0, 1}});
  EXPECT_TRUE(validate(basis, empty_graph(2)).empty());
  EXPECT_TRUE(validate(basis, complete_graph(2)).empty());
  const auto ones = from_columns({{1}, {1}});
  EXPECT_TRUE(validate(ones, complete_graph(2)).empty());
  const auto v = validate(ones, empty_graph(2));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].u, 0u);
  EXPECT_EQ(v[0].v, 1u);
}

TEST(StableSetInequality, Examples) {
  const Graph c5 = cycle_graph(5);
  const auto cyc = build_cycle_labelings(5);
  const double c = std::cos(std::numbers::pi / 5);
  EXPECT_NEAR(stable_set_inequality(cyc.a, c5, {0, 2}), 2 * (1 + c) / (5 * c), 1e-12);
  EXPECT_LE(stable_set_inequality(cyc.a, c5, {3}), 1.0);
  EXPECT_THROW(stable_set_inequality(cyc.a, c5, {0, 1}), InvalidArgument);
  const auto kn = build_kn_labelings(WeightVector::ones(4));
  EXPECT_NEAR(stable_set_inequality(kn.a, complete_graph(4), {2}), 1.0, 1e-15);
}

TEST(CompleteAndEmpty, Constructions) {
  const auto k3 = build_kn_labelings(WeightVector::ones(3));
  EXPECT_EQ(k3.theta, 1.0);
  for (Eigen::Index v = 0; v < 3; ++v) {
    EXPECT_EQ(k3.a.vectors(0, v), 1.0);
    EXPECT_EQ(k3.a.vectors(1, v), 0.0);
  }
  EXPECT_TRUE(pair_report(k3, complete_graph(3), WeightVector::ones(3)).pass());

  const auto e3 = build_empty_labelings(WeightVector::ones(3));
  EXPECT_EQ(e3.theta, 3.0);
  for (double c : cost(e3.a)) EXPECT_NEAR(c, 1.0 / 3, 1e-12);
  EXPECT_TRUE(pair_report(e3, empty_graph(3), WeightVector::ones(3)).pass());

  const WeightVector w({0.5, 2, 1, 3.5});
  const auto kw = build_kn_labelings(w);
  EXPECT_EQ(kw.theta, 3.5);
  EXPECT_TRUE(pair_report(kw, complete_graph(4), w).pass());
  const auto ew = build_empty_labelings(w);
  EXPECT_EQ(ew.theta, 7.0);
  EXPECT_TRUE(pair_report(ew, empty_graph(4), w).pass());

  EXPECT_THROW(build_kn_labelings(WeightVector(std::vector<double>(3, 0.0))), InvalidArgument);
}

TEST(CycleLabelings, Costs) {
  const double c = std::cos(std::numbers::pi / 5);
  const auto p = build_cycle_labelings(5);
  EXPECT_EQ(p.a.dim(), 9u);
  EXPECT_EQ(p.b.dim(), 3u);
  for (double x : cost(p.a)) EXPECT_NEAR(x, (1 + c) / (5 * c), 1e-12);
  EXPECT_NEAR(pairing_sum(p.a, p.b), 1.0, 1e-12);
  EXPECT_NEAR(p.theta, kSqrt5, 1e-12);
}

TEST(CycleLabelings, CertifyOddCycles) {
  for (std::size_t n = 3; n <= 15; n += 2) {
    const auto p = build_cycle_labelings(n);
    const auto r = pair_report(p, cycle_graph(n), WeightVector::ones(n));
    EXPECT_TRUE(r.pass()) << n;
  }
  EXPECT_NEAR(build_cycle_labelings(3).theta, 1.0, 1e-12);
  const double c7 = std::cos(std::numbers::pi / 7);
  EXPECT_NEAR(build_cycle_labelings(7).theta, 7 * c7 / (1 + c7), 1e-12);
  EXPECT_THROW(build_cycle_labelings(6), InvalidArgument);
  EXPECT_THROW(build_cycle_labelings(1), InvalidArgument);
}

TEST(Sum, TwoIsolatedVertices) {
  const WeightVector one = WeightVector::ones(1);
  const auto k1 = from_columns({{1}});
  const auto a = sum_labeling(k1, k1, 1, 1, one, one);
  for (double c : cost(a)) EXPECT_DOUBLE_EQ(c, 0.5);
  EXPECT_TRUE(validate(a, empty_graph(2)).empty());
}

TEST(Sum, TwoFiveCycles) {
  const auto p = build_cycle_labelings(5);
  const WeightVector w5 = WeightVector::ones(5);
  const auto a = sum_labeling(standard_form(p.a, w5), standard_form(p.a, w5), p.theta, p.theta, w5, w5);
  const auto b = sum_complement_labeling(p.b, p.b);
  const Graph g = direct_sum(cycle_graph(5), cycle_graph(5));
  for (Eigen::Index v = 0; v < 10; ++v) EXPECT_NEAR(a.vectors.col(v).squaredNorm(), 2 * kSqrt5, 1e-12);
  EXPECT_TRUE(verify_theorem13(a, b, g, WeightVector::ones(10), 2 * kSqrt5, 1e-9).pass());
}

TEST(Sum, WeightedPartsWithDifferentSizes) {
  const WeightVector w1({1, 2, 3}), w2({0.5, 4});
  const auto p1 = build_empty_labelings(w1);
  const auto p2 = build_kn_labelings(w2);
  const auto a = sum_labeling(standard_form(p1.a, w1), standard_form(p2.a, w2), p1.theta, p2.theta, w1, w2);
  const auto b = sum_complement_labeling(p1.b, p2.b);
  const Graph g = direct_sum(empty_graph(3), complete_graph(2));
  EXPECT_TRUE(verify_theorem13(a, b, g, WeightVector({1, 2, 3, 0.5, 4}), 10, 1e-9).pass());
}

TEST(Sum, RejectsNonStandardInput) {
  const auto p = build_cycle_labelings(5);
  const WeightVector w5 = WeightVector::ones(5);
  EXPECT_THROW(sum_labeling(p.a, p.a, p.theta, p.theta, w5, w5), PatternError);
}

TEST(Cosum, EmptyTwoAndEmptyFour) {
  const WeightVector w2 = WeightVector::ones(2), w4 = WeightVector::ones(4);
  const auto p2 = build_empty_labelings(w2), p4 = build_empty_labelings(w4);
  const auto a = cosum_labeling(standard_form(p2.a, w2), standard_form(p4.a, w4), 2, 4, w2, w4);
  const auto b = cosum_complement_labeling(p2.b, p4.b, 2, 4);
  const Graph g = direct_cosum(empty_graph(2), empty_graph(4));
  for (Eigen::Index v = 0; v < 6; ++v) EXPECT_NEAR(a.vectors.col(v).squaredNorm(), 4, 1e-12);
  EXPECT_TRUE(verify_theorem13(a, b, g, WeightVector::ones(6), 4, 1e-9).pass());
}

TEST(Cosum, CyclesEitherOrder) {
  const auto p5 = build_cycle_labelings(5), p7 = build_cycle_labelings(7);
  const WeightVector w5 = WeightVector::ones(5), w7 = WeightVector::ones(7);
  const auto a = cosum_labeling(standard_form(p5.a, w5), standard_form(p7.a, w7), p5.theta, p7.theta, w5, w7);
  const auto b = cosum_complement_labeling(p5.b, p7.b, p5.theta, p7.theta);
  const Graph g = direct_cosum(cycle_graph(5), cycle_graph(7));
  EXPECT_TRUE(verify_theorem13(a, b, g, WeightVector::ones(12), p7.theta, 1e-9).pass());
}

TEST(Product, UnitLabelings) {
  const auto a = product_labeling(from_columns({{1}, {1}}), from_columns({{1}, {1}, {1}}));
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.vectors, Matrix::Ones(1, 6));
}

TEST(Product, FiveCycleSquared) {
  const auto p = build_cycle_labelings(5);
  const auto a = product_labeling(p.a, p.a), b = product_labeling(p.b, p.b);
  const Graph g = strong_product(cycle_graph(5), cycle_graph(5));
  EXPECT_EQ(a.dim(), 81u);
  const auto ca = cost(p.a), cp = cost(a);
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = 0; v < 5; ++v) EXPECT_NEAR(cp[u * 5 + v], ca[u] * ca[v], 1e-10);
  for (std::size_t u = 0; u < 25; u += 4)
    for (std::size_t v = 0; v < 25; v += 3)
      EXPECT_NEAR(a.dot(u, v), p.a.dot(u / 5, v / 5) * p.a.dot(u % 5, v % 5), 1e-12);
  EXPECT_TRUE(verify_theorem13(a, b, g, WeightVector::ones(25), 5, 1e-9).pass());
}

TEST(LiftSquare, Properties) {
  const auto p = build_cycle_labelings(5);
  const auto sq = lift_square(p.b);
  EXPECT_EQ(sq.dim(), 9u);
  for (double c : cost(sq)) EXPECT_NEAR(c, 1.0 / 3, 1e-12);
  const auto unit = normalized(p.b);
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = 0; v < 5; ++v) EXPECT_NEAR(sq.dot(u, v), std::pow(unit.dot(u, v), 2), 1e-9);
  // Orthogonality carries over, so 3 bounds theta of the complement from above.
  EXPECT_TRUE(validate(sq, complement(cycle_graph(5))).empty());
  EXPECT_LE(kSqrt5, 3.0);

  const auto ones = lift_square(from_columns({{1}, {1}, {1}}));
  for (double c : cost(ones)) EXPECT_NEAR(c, 1.0, 1e-15);
  OrthogonalLabeling basis{Matrix::Identity(4, 4)};
  const auto b4 = lift_square(basis);
  EXPECT_TRUE(validate(b4, empty_graph(4)).empty());
  for (double c : cost(b4)) EXPECT_NEAR(c, 0.25, 1e-12);
  EXPECT_THROW(lift_square(from_columns({{1, 0}, {0, 0}})), InvalidArgument);
}

TEST(LiftSquare, RandomLabelings) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_gnp(7, 0.5, seed);
    const auto a = random_labeling(g, seed);
    const auto sq = lift_square(a);
    const auto unit = normalized(a);
    for (std::size_t u = 0; u < 7; ++u)
      for (std::size_t v = 0; v < 7; ++v) EXPECT_NEAR(sq.dot(u, v), std::pow(unit.dot(u, v), 2), 1e-9);
    EXPECT_TRUE(validate(sq, g).empty());
  }
}

TEST(ReduceCost, Properties) {
  const Graph c5 = cycle_graph(5);
  const auto a = build_cycle_labelings(5).a;
  const double c = cost(a.vec(2));
  for (double target : {c, 0.7 * c, 0.1 * c, 0.0}) {
    const auto r = reduce_cost(a, 2, target);
    EXPECT_TRUE(validate(r, c5).empty());
    EXPECT_NEAR(cost(r.vec(2)), target, 1e-12);
    for (std::size_t v : {0u, 1u, 3u, 4u}) EXPECT_NEAR(cost(r.vec(v)), cost(a.vec(v)), 1e-15);
  }
  EXPECT_THROW(reduce_cost(a, 2, c + 0.1), InvalidArgument);
  EXPECT_THROW(reduce_cost(a, 7, 0.0), InvalidArgument);
}

TEST(Pairing, RandomLabelingsNeverExceedOne) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_gnp(8, 0.2 + 0.015 * static_cast<double>(seed), seed);
    const auto a = random_labeling(g, seed * 2);
    auto b = random_labeling(complement(g), seed * 2 + 1);
    b.target = Target::Complement;
    ASSERT_TRUE(validate(a, g).empty());
    ASSERT_TRUE(validate(b, complement(g)).empty());
    EXPECT_LE(pairing_sum(a, b), 1.0 + 1e-9);
  }
}

TEST(PairingProduct, NormalizedOptimalPairs) {
  const auto cyc = build_cycle_labelings(7);
  EXPECT_LE(pairing_product_residual(cyc.a, cyc.b, WeightVector::ones(7), cyc.theta), 1e-6);
  const WeightVector w({1, 3, 2});
  const auto kn = build_kn_labelings(w);
  EXPECT_LE(pairing_product_residual(kn.a, kn.b, w, kn.theta), 1e-6);
  const auto en = build_empty_labelings(w);
  EXPECT_LE(pairing_product_residual(en.a, en.b, w, en.theta), 1e-6);
}

TEST(Compatible, GoldenMatrixGivesCostsOneOverRootFive) {
  const CompatibleMatrix a{SymMatrix::from_dense(golden::a(), 1e-12), kSqrt5, WeightVector::ones(5)};
  const auto l = labeling_from_compatible(a, cycle_graph(5));
  EXPECT_EQ(l.dim(), 6u);
  for (double c : cost(l)) EXPECT_NEAR(c, 1 / kSqrt5, 1e-12);
  EXPECT_TRUE(validate(l, cycle_graph(5)).empty());
  const auto back = compatible_from_labeling(l, WeightVector::ones(5), kSqrt5);
  EXPECT_LE((back.matrix.dense() - golden::a()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Compatible, FromCompleteGraphLabeling) {
  const WeightVector w({1, 2, 4});
  const auto p = build_kn_labelings(w);
  const auto a = compatible_from_labeling(p.a, w, p.theta);
  EXPECT_NO_THROW(require_compatible(a, complete_graph(3)));
  EXPECT_EQ(a.matrix(0, 0), 4.0);
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_NEAR(a.matrix(0, v + 1), w[v], 1e-12);
    EXPECT_NEAR(a.matrix(v + 1, v + 1), w[v], 1e-12);
  }
}

TEST(Compatible, RoundTripPreservesGram) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_gnp(7, 0.5, seed);
    const auto a = random_labeling(g, seed + 50);
    // Weights are whatever the labeling certifies at lambda = 2.
    std::vector<double> w;
    for (double c : cost(a)) w.push_back(2 * c);
    const auto m = compatible_from_labeling(a, WeightVector(w), 2.0);
    require_compatible(m, g);
    const auto l = labeling_from_compatible(m, g);
    const auto again = compatible_from_labeling(l, WeightVector(w), 2.0);
    EXPECT_LE((again.matrix.dense() - m.matrix.dense()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Compatible, Errors) {
  Matrix bad = golden::a();
  bad(1, 3) = bad(3, 1) = 0.2;
  EXPECT_THROW(require_compatible({SymMatrix::from_dense(bad), kSqrt5, WeightVector::ones(5)}, cycle_graph(5)),
               PatternError);
  Matrix low = golden::a();
  low(0, 0) = 2.0;
  EXPECT_THROW(require_compatible({SymMatrix::from_dense(low), 2.0, WeightVector::ones(5)}, cycle_graph(5)),
               NotPsdError);
}

TEST(CliqueCover, CompleteGraph) {
  const auto c = clique_cover_labeling(complete_graph(4), WeightVector::ones(4), {{0, 1, 2, 3}}, {1.0});
  EXPECT_EQ(c.compatible.lambda, 1.0);
  EXPECT_TRUE(verify_compatible(c.compatible, complete_graph(4), 1e-12).pass());
}

TEST(CliqueCover, FiveCycleHalfOnEdges) {
  const Graph c5 = cycle_graph(5);
  const auto cl = exact::maximal_cliques(c5).cliques;
  const auto c = clique_cover_labeling(c5, WeightVector::ones(5), cl, std::vector<double>(5, 0.5));
  EXPECT_DOUBLE_EQ(c.compatible.lambda, 2.5);
  EXPECT_NEAR(c.compatible.lambda, exact::kappa(c5).value, 1e-9);
  EXPECT_TRUE(verify_compatible(c.compatible, c5, 1e-12).pass());
  for (double x : cost(c.labeling)) EXPECT_NEAR(x, 0.4, 1e-12);
  EXPECT_TRUE(validate(c.labeling, c5).empty());
}

TEST(CliqueCover, Errors) {
  const Graph c5 = cycle_graph(5);
  const auto cl = exact::maximal_cliques(c5).cliques;
  try {
    clique_cover_labeling(c5, WeightVector::ones(5), cl, {0.5, 0.5, 0.5, 0.5, 0.4});
    FAIL();
  } catch (const PatternError& e) {
    EXPECT_NE(std::string(e.what()).find("cover equation"), std::string::npos);
  }
  EXPECT_THROW(clique_cover_labeling(c5, WeightVector::ones(5), {{0, 2}}, {1.0}), InvalidArgument);
}

TEST(Bipartite, OptimalWeights) {
  const auto k23 = bipartite_optimal_g(complete_bipartite(2, 3), WeightVector::ones(5));
  EXPECT_NEAR(k23.lambda, 3.0, 1e-12);
  const Graph c6 = cycle_graph(6);
  const auto g6 = bipartite_optimal_g(c6, WeightVector::ones(6));
  EXPECT_NEAR(g6.lambda, 3.0, 1e-12);
  const auto lab = clique_cover_labeling(c6, WeightVector::ones(6), g6.cliques, g6.g);
  EXPECT_NEAR(lab.compatible.lambda, exact::alpha(c6).value, 1e-12);
  EXPECT_TRUE(verify_compatible(lab.compatible, c6, 1e-12).pass());
  for (auto [m, n] : {std::pair{1.0, 3.0}, {2.0, 2.0}, {3.0, 4.0}})
    EXPECT_NEAR(bipartite_optimal_g(complete_graph(2), WeightVector({m, n})).lambda, std::max(m, n), 1e-12);
  EXPECT_THROW(bipartite_optimal_g(cycle_graph(5), WeightVector::ones(5)), InvalidArgument);
}

TEST(Bipartite, MatchesAlphaOnRandomBipartiteGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t a = 3 + seed % 3, b = 2 + seed % 4;
    GraphBuilder gb(a + b);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v = a; v < a + b; ++v)
        if (rng.uniform() < 0.45) gb.add_edge(u, v);
    const Graph g = std::move(gb).build();
    std::vector<double> w(a + b);
    for (auto& x : w) x = std::floor(1 + rng.uniform() * 5);
    const auto cw = bipartite_optimal_g(g, WeightVector(w));
    EXPECT_NEAR(cw.lambda, oracle::alpha(g, w), 1e-9);
    const auto lab = clique_cover_labeling(g, WeightVector(w), cw.cliques, cw.g);
    EXPECT_TRUE(verify_compatible(lab.compatible, g, 1e-9).pass());
  }
}

#pragma once

// Orthogonal labelings: costs, validation, the explicit optimal constructions
// for complete/empty graphs and odd cycles, the sum/cosum/product
// combinators, the squared-labeling lift, clique-cover labelings and the
// translation to and from compatible matrices.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "lovasz/error.hpp"
#include "lovasz/exact.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/linalg.hpp"
#include "lovasz/maxflow.hpp"

namespace lovasz {

using linalg::Matrix;
using linalg::SymMatrix;
using linalg::Vector;

inline constexpr double kTolLabel = 1e-8;

/// Which graph a labeling is meant for.
enum class Target { Graph, Complement };

/// One d-vector per vertex, stored as the columns of a d x n matrix.
struct OrthogonalLabeling {
  Matrix vectors;
  Target target = Target::Graph;

  std::size_t dim() const { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(vectors.cols()); }
  Vector vec(std::size_t v) const { return vectors.col(static_cast<Eigen::Index>(v)); }
  double dot(std::size_t u, std::size_t v) const {
    return vectors.col(static_cast<Eigen::Index>(u)).dot(vectors.col(static_cast<Eigen::Index>(v)));
  }
};

/// (n+1) x (n+1) matrix indexed by {0} u V: psd, corner lambda, diagonal and
/// border w, zero on nonadjacent pairs.
struct CompatibleMatrix {
  SymMatrix matrix;
  double lambda = 0;
  WeightVector w;
};

struct Violation {
  Vertex u, v;
  double dot;
};

/// a_1v^2 / |a_v|^2, zero for the zero vector.
inline double cost(const Vector& a) {
  const double nn = a.squaredNorm();
  if (nn == 0.0 || a.size() == 0) return 0.0;
  return std::min(1.0, a(0) * a(0) / nn);
}

inline std::vector<double> cost(const OrthogonalLabeling& l) {
  std::vector<double> out(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) out[v] = cost(l.vec(v));
  return out;
}

/// Nonadjacent pairs of h whose vectors are not orthogonal (tolerance scaled by max |a_v|^2).
inline std::vector<Violation> validate(const OrthogonalLabeling& l, const Graph& h, double tol = kTolLabel) {
  if (l.size() != h.order()) throw InvalidArgument("validate: labeling size differs from vertex count");
  double scale = 1.0;
  for (std::size_t v = 0; v < l.size(); ++v) scale = std::max(scale, l.vec(v).squaredNorm());
  std::vector<Violation> out;
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v) {
      if (h.adjacent(u, v)) continue;
      const double d = l.dot(u, v);
      if (std::abs(d) > tol * scale) out.push_back({u, v, d});
    }
  return out;
}

/// Sum of costs over a stable set S of g; at most 1 for a valid labeling of g.
inline double stable_set_inequality(const OrthogonalLabeling& l, const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) throw InvalidArgument("stable_set_inequality: S is not stable");
  double sum = 0;
  for (Vertex v : s) sum += cost(l.vec(v));
  return sum;
}

/// Sum over v of c(a_v) c(b_v).
inline double pairing_sum(const OrthogonalLabeling& a, const OrthogonalLabeling& b) {
  if (a.size() != b.size()) throw InvalidArgument("pairing_sum: labelings differ in size");
  double s = 0;
  for (std::size_t v = 0; v < a.size(); ++v) s += cost(a.vec(v)) * cost(b.vec(v));
  return s;
}

inline SymMatrix gram(const OrthogonalLabeling& l) { return linalg::gram(l.vectors); }

/// Every nonzero vector scaled to unit length.
inline OrthogonalLabeling normalized(OrthogonalLabeling l) {
  for (Eigen::Index v = 0; v < l.vectors.cols(); ++v) {
    const double nn = l.vectors.col(v).norm();
    if (nn > 0) l.vectors.col(v) /= nn;
  }
  return l;
}

/// A labeling of G together with one of its complement, plus the theta they certify.
struct LabelingPair {
  OrthogonalLabeling a;  // for G
  OrthogonalLabeling b;  // for the complement of G
  double theta = 0;
};

namespace detail {

inline void require_nonzero(const WeightVector& w, const char* what) {
  if (w.size() == 0 || w.is_zero()) throw InvalidArgument(std::string(what) + ": weights must not all be zero");
}

}  // namespace detail

/// K_n: a_v = (sqrt w_v, sqrt(theta - w_v)), b one-dimensional at a heaviest vertex.
inline LabelingPair build_kn_labelings(const WeightVector& w) {
  detail::require_nonzero(w, "build_kn_labelings");
  const std::size_t n = w.size();
  const double theta = w.max();
  const std::size_t vmax = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  LabelingPair p;
  p.theta = theta;
  p.a.vectors = Matrix(2, static_cast<Eigen::Index>(n));
  p.b.vectors = Matrix::Zero(1, static_cast<Eigen::Index>(n));
  p.b.target = Target::Complement;
  for (std::size_t v = 0; v < n; ++v) {
    p.a.vectors(0, static_cast<Eigen::Index>(v)) = std::sqrt(w[v]);
    p.a.vectors(1, static_cast<Eigen::Index>(v)) = std::sqrt(std::max(0.0, theta - w[v]));
  }
  p.b.vectors(0, static_cast<Eigen::Index>(vmax)) = 1.0;
  return p;
}

/// Empty graph: a = columns of an orthogonal matrix with top row sqrt(w_v / theta), b_v = (1).
inline LabelingPair build_empty_labelings(const WeightVector& w) {
  detail::require_nonzero(w, "build_empty_labelings");
  const auto n = static_cast<Eigen::Index>(w.size());
  const double theta = w.sum();
  Matrix r(n, 1);
  for (Eigen::Index v = 0; v < n; ++v) r(v, 0) = std::sqrt(w[static_cast<std::size_t>(v)] / theta);
  r.col(0).normalize();
  LabelingPair p;
  p.theta = theta;
  p.a.vectors = linalg::complete_orthogonal(r).transpose();
  p.b.vectors = Matrix::Ones(1, n);
  p.b.target = Target::Complement;
  return p;
}

/// Odd cycle C_n with unit weights: a for C_n in dimension 2n-1 (Fourier
/// coefficients), b for its complement in dimension 3.
inline LabelingPair build_cycle_labelings(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("build_cycle_labelings: n must be odd and at least 3");
  const double phi = std::numbers::pi * static_cast<double>(n - 1) / static_cast<double>(n);
  const double alpha = std::sqrt(-std::cos(phi));
  const double two_x = -1.0 / std::cos(phi);
  const auto N = static_cast<Eigen::Index>(n);
  LabelingPair p;
  p.b.target = Target::Complement;
  p.b.vectors = Matrix(3, N);
  p.a.vectors = Matrix(2 * N - 1, N);
  std::vector<double> coef(n);
  for (std::size_t k = 0; k < n; ++k)
    coef[k] = std::sqrt(std::max(0.0, (1.0 + two_x * std::cos(static_cast<double>(k) * phi)) / static_cast<double>(n)));
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = static_cast<Eigen::Index>(v);
    const double t = static_cast<double>(v) * phi;
    p.b.vectors(0, c) = alpha;
    p.b.vectors(1, c) = std::cos(t);
    p.b.vectors(2, c) = std::sin(t);
    p.a.vectors(0, c) = coef[0];
    for (std::size_t k = 1; k < n; ++k) {
      const double kt = static_cast<double>(k) * t;
      p.a.vectors(static_cast<Eigen::Index>(2 * k - 1), c) = coef[k] * std::cos(kt);
      p.a.vectors(static_cast<Eigen::Index>(2 * k), c) = coef[k] * std::sin(kt);
    }
  }
  const double cp = std::cos(std::numbers::pi / static_cast<double>(n));
  p.theta = static_cast<double>(n) * cp / (1.0 + cp);
  return p;
}

namespace detail {

// |a_v|^2 = theta and a_1v = sqrt(w_v) for every v.
inline void require_standard_form(const OrthogonalLabeling& a, double theta, const WeightVector& w, const char* what) {
  if (a.size() != w.size()) throw InvalidArgument(std::string(what) + ": labeling and weights differ in size");
  for (std::size_t v = 0; v < a.size(); ++v) {
    const Vector x = a.vec(v);
    const double r1 = std::abs(x.squaredNorm() - theta), r2 = std::abs(x(0) - std::sqrt(w[v]));
    if (r1 > 1e-8 * (1.0 + theta)) throw PatternError(std::string(what) + ": |a_v|^2 = theta", v, v, r1);
    if (r2 > 1e-8 * (1.0 + theta)) throw PatternError(std::string(what) + ": a_1v = sqrt(w_v)", v, v, r2);
  }
}

}  // namespace detail

/// Labeling of G' + G'' in dimension d' + d'' from standard-form labelings of
/// the parts; its squared lengths are theta' + theta''.
inline OrthogonalLabeling sum_labeling(const OrthogonalLabeling& a1, const OrthogonalLabeling& a2, double t1, double t2,
                                       const WeightVector& w1, const WeightVector& w2) {
  detail::require_standard_form(a1, t1, w1, "sum_labeling (first)");
  detail::require_standard_form(a2, t2, w2, "sum_labeling (second)");
  if (!(t1 > 0 && t2 > 0)) throw InvalidArgument("sum_labeling: both theta values must be positive");
  const auto d1 = static_cast<Eigen::Index>(a1.dim()), d2 = static_cast<Eigen::Index>(a2.dim());
  const auto n1 = static_cast<Eigen::Index>(a1.size()), n2 = static_cast<Eigen::Index>(a2.size());
  const double t = t1 + t2;
  OrthogonalLabeling out;
  out.vectors = Matrix::Zero(d1 + d2, n1 + n2);
  for (Eigen::Index v = 0; v < n1; ++v) {
    out.vectors(0, v) = a1.vectors(0, v);
    for (Eigen::Index j = 1; j < d1; ++j) out.vectors(j, v) = std::sqrt(t / t1) * a1.vectors(j, v);
    out.vectors(d1, v) = std::sqrt(t2 * w1[static_cast<std::size_t>(v)] / t1);
  }
  for (Eigen::Index v = 0; v < n2; ++v) {
    const Eigen::Index c = n1 + v;
    out.vectors(0, c) = a2.vectors(0, v);
    out.vectors(d1, c) = -std::sqrt(t1 * w2[static_cast<std::size_t>(v)] / t2);
    for (Eigen::Index j = 1; j < d2; ++j) out.vectors(d1 + j, c) = std::sqrt(t / t2) * a2.vectors(j, v);
  }
  return out;
}

/// Labeling of the cosum in dimension d' + d''; squared lengths max(theta', theta'').
/// Roles are swapped internally when theta' < theta''; vertex order is kept.
inline OrthogonalLabeling cosum_labeling(const OrthogonalLabeling& a1, const OrthogonalLabeling& a2, double t1,
                                         double t2, const WeightVector& w1, const WeightVector& w2) {
  detail::require_standard_form(a1, t1, w1, "cosum_labeling (first)");
  detail::require_standard_form(a2, t2, w2, "cosum_labeling (second)");
  if (!(t1 > 0 && t2 > 0)) throw InvalidArgument("cosum_labeling: both theta values must be positive");
  const bool swap = t1 < t2;
  const OrthogonalLabeling& big = swap ? a2 : a1;
  const OrthogonalLabeling& small = swap ? a1 : a2;
  const double tb = swap ? t2 : t1, ts = swap ? t1 : t2;
  const WeightVector& ws = swap ? w1 : w2;
  const auto db = static_cast<Eigen::Index>(big.dim()), ds = static_cast<Eigen::Index>(small.dim());
  const auto nb = static_cast<Eigen::Index>(big.size()), ns = static_cast<Eigen::Index>(small.size());
  const Eigen::Index off_big = swap ? ns : 0, off_small = swap ? 0 : nb;
  OrthogonalLabeling out;
  out.vectors = Matrix::Zero(db + ds, nb + ns);
  for (Eigen::Index v = 0; v < nb; ++v)
    for (Eigen::Index j = 0; j < db; ++j) out.vectors(j, off_big + v) = big.vectors(j, v);
  for (Eigen::Index v = 0; v < ns; ++v) {
    const Eigen::Index c = off_small + v;
    out.vectors(0, c) = small.vectors(0, v);
    out.vectors(db, c) = std::sqrt((tb - ts) * ws[static_cast<std::size_t>(v)] / ts);
    for (Eigen::Index j = 1; j < ds; ++j) out.vectors(db + j, c) = std::sqrt(tb / ts) * small.vectors(j, v);
  }
  return out;
}

/// Complement-side labeling for a sum: the parts' b vectors, zero-padded to a common dimension.
inline OrthogonalLabeling sum_complement_labeling(const OrthogonalLabeling& b1, const OrthogonalLabeling& b2) {
  const auto d = static_cast<Eigen::Index>(std::max(b1.dim(), b2.dim()));
  const auto n1 = static_cast<Eigen::Index>(b1.size()), n2 = static_cast<Eigen::Index>(b2.size());
  OrthogonalLabeling out;
  out.target = Target::Complement;
  out.vectors = Matrix::Zero(d, n1 + n2);
  out.vectors.block(0, 0, b1.vectors.rows(), n1) = b1.vectors;
  out.vectors.block(0, n1, b2.vectors.rows(), n2) = b2.vectors;
  return out;
}

/// Complement-side labeling for a cosum: b' on the side with the larger theta, zero elsewhere.
inline OrthogonalLabeling cosum_complement_labeling(const OrthogonalLabeling& b1, const OrthogonalLabeling& b2,
                                                    double t1, double t2) {
  const auto d = static_cast<Eigen::Index>(std::max(b1.dim(), b2.dim()));
  const auto n1 = static_cast<Eigen::Index>(b1.size()), n2 = static_cast<Eigen::Index>(b2.size());
  OrthogonalLabeling out;
  out.target = Target::Complement;
  out.vectors = Matrix::Zero(d, n1 + n2);
  if (t1 >= t2)
    out.vectors.block(0, 0, b1.vectors.rows(), n1) = b1.vectors;
  else
    out.vectors.block(0, n1, b2.vectors.rows(), n2) = b2.vectors;
  return out;
}

/// Hadamard product: coordinate j'*d'' + j'' of vertex u'*n'' + u'' is a'_{j'u'} a''_{j''u''}.
inline OrthogonalLabeling product_labeling(const OrthogonalLabeling& a1, const OrthogonalLabeling& a2) {
  const auto d1 = static_cast<Eigen::Index>(a1.dim()), d2 = static_cast<Eigen::Index>(a2.dim());
  const auto n1 = static_cast<Eigen::Index>(a1.size()), n2 = static_cast<Eigen::Index>(a2.size());
  OrthogonalLabeling out;
  out.target = a1.target;
  out.vectors = Matrix(d1 * d2, n1 * n2);
  for (Eigen::Index u1 = 0; u1 < n1; ++u1)
    for (Eigen::Index u2 = 0; u2 < n2; ++u2)
      for (Eigen::Index j1 = 0; j1 < d1; ++j1)
        for (Eigen::Index j2 = 0; j2 < d2; ++j2)
          out.vectors(j1 * d2 + j2, u1 * n2 + u2) = a1.vectors(j1, u1) * a2.vectors(j2, u2);
  return out;
}

/// Dimension-d^2 labeling with a''_u . a''_v = (a_u . a_v)^2 (after
/// normalising) and every cost 1/d. Rejects zero vectors.
inline OrthogonalLabeling lift_square(const OrthogonalLabeling& a) {
  const auto d = static_cast<Eigen::Index>(a.dim()), n = static_cast<Eigen::Index>(a.size());
  for (Eigen::Index v = 0; v < n; ++v)
    if (a.vectors.col(v).norm() == 0.0)
      throw InvalidArgument("lift_square: vertex " + std::to_string(v) + " has the zero vector");
  const OrthogonalLabeling unit = normalized(a);
  Matrix sq(d * d, n);
  for (Eigen::Index v = 0; v < n; ++v)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) sq(j * d + k, v) = unit.vectors(j, v) * unit.vectors(k, v);
  Vector r = Vector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) r(j * d + j) = 1.0 / std::sqrt(static_cast<double>(d));
  const Matrix q = linalg::householder_embed(r).transpose();
  OrthogonalLabeling out;
  out.target = a.target;
  out.vectors = q * sq;
  return out;
}

/// Appends one coordinate, nonzero only at v, so that c(a_v) drops to `target`
/// (any value in [0, c(a_v)]); target 0 replaces a_v by the zero vector.
inline OrthogonalLabeling reduce_cost(const OrthogonalLabeling& a, Vertex v, double target) {
  if (v >= a.size()) throw InvalidArgument("reduce_cost: bad vertex");
  const Vector x = a.vec(v);
  const double c = cost(x);
  if (!(target >= 0 && target <= c + 1e-15)) throw InvalidArgument("reduce_cost: target must lie in [0, c(a_v)]");
  OrthogonalLabeling out;
  out.target = a.target;
  out.vectors = Matrix::Zero(a.vectors.rows() + 1, a.vectors.cols());
  out.vectors.topRows(a.vectors.rows()) = a.vectors;
  const auto col = static_cast<Eigen::Index>(v);
  if (target == 0.0) {
    out.vectors.col(col).setZero();
  } else {
    out.vectors(a.vectors.rows(), col) = std::sqrt(std::max(0.0, x(0) * x(0) / target - x.squaredNorm()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compatible matrices

/// Throws PatternError unless A is lambda-compatible with g and w (psd
/// within tolerance, corner, border, diagonal, zeros on nonadjacent pairs).
inline void require_compatible(const CompatibleMatrix& a, const Graph& g, double tol = 1e-8) {
  const std::size_t n = g.order();
  if (a.matrix.order() != n + 1 || a.w.size() != n) throw InvalidArgument("compatible matrix has the wrong order");
  const double scale = 1.0 + a.matrix.max_abs();
  auto check = [&](const char* rule, std::size_t i, std::size_t j, double want) {
    const double r = std::abs(a.matrix(i, j) - want);
    if (r > tol * scale) throw PatternError(rule, i, j, r);
  };
  check("corner = lambda", 0, 0, a.lambda);
  for (std::size_t v = 0; v < n; ++v) {
    check("border = w", 0, v + 1, a.w[v]);
    check("diagonal = w", v + 1, v + 1, a.w[v]);
    for (std::size_t u = v + 1; u < n; ++u)
      if (!g.adjacent(u, v)) check("zero on nonadjacent pairs", u + 1, v + 1, 0.0);
  }
  const double lmin = linalg::lambda_min(a.matrix);
  if (lmin < -tol * scale) throw NotPsdError(lmin);
}

/// Labeling with costs w_v / lambda from a lambda-compatible matrix: factor
/// A = X^T X, then rotate so the special vector becomes (sqrt lambda, 0, ...).
inline OrthogonalLabeling labeling_from_compatible(const CompatibleMatrix& a, const Graph& g, double tol = 1e-8) {
  require_compatible(a, g, tol);
  if (!(a.lambda > 0)) throw InvalidArgument("labeling_from_compatible: lambda must be positive");
  const Matrix x = linalg::psd_factor(a.matrix, tol);
  const Vector a0 = x.col(0) / x.col(0).norm();
  const Matrix q = linalg::householder_embed(a0).transpose();
  const Matrix rotated = q * x;
  OrthogonalLabeling out;
  out.vectors = rotated.rightCols(rotated.cols() - 1);
  return out;
}

/// Gram matrix of (a_0, a_1, ..., a_n) after scaling each a_v to |a_v|^2 = w_v
/// with a_1v >= 0 and prepending a_0 = (sqrt lambda, 0, ...). Requires c(a_v) = w_v / lambda.
inline CompatibleMatrix compatible_from_labeling(const OrthogonalLabeling& a, const WeightVector& w, double lambda,
                                                 double tol = 1e-8) {
  if (a.size() != w.size()) throw InvalidArgument("compatible_from_labeling: labeling and weights differ in size");
  if (!(lambda > 0)) throw InvalidArgument("compatible_from_labeling: lambda must be positive");
  const auto n = static_cast<Eigen::Index>(a.size());
  Matrix cols = Matrix::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(a.dim(), 1)), n + 1);
  cols(0, 0) = std::sqrt(lambda);
  for (Eigen::Index v = 0; v < n; ++v) {
    const auto vv = static_cast<std::size_t>(v);
    const Vector x = a.vec(vv);
    const double r = std::abs(cost(x) - w[vv] / lambda);
    if (r > tol) throw PatternError("cost = w_v / lambda", vv, vv, r);
    if (w[vv] == 0.0 || x.norm() == 0.0) continue;
    const double scale = std::sqrt(w[vv]) / x.norm() * (x(0) < 0 ? -1.0 : 1.0);
    cols.col(v + 1).head(x.size()) = scale * x;
  }
  return {linalg::gram(cols), lambda, w};
}

// ---------------------------------------------------------------------------
// Clique covers

struct CliqueCoverLabeling {
  std::vector<exact::VertexSet> cliques;
  std::vector<double> g;
  Matrix vectors;          // one row per clique, columns 0..n (0 is the special index)
  CompatibleMatrix compatible;
  OrthogonalLabeling labeling;  // costs w_v / lambda
};

/// a_{Qv} = sqrt(g(Q)) for v in Q (and for v = 0); lambda = sum of g.
inline CliqueCoverLabeling clique_cover_labeling(const Graph& gr, const WeightVector& w,
                                                 const std::vector<exact::VertexSet>& cliques,
                                                 const std::vector<double>& g) {
  require_weights(gr, w);
  if (cliques.size() != g.size()) throw InvalidArgument("clique_cover_labeling: one weight per clique required");
  const std::size_t n = gr.order();
  std::vector<double> cover(n, 0.0);
  double lambda = 0;
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    if (!(g[q] >= 0)) throw InvalidArgument("clique_cover_labeling: clique weights must be nonnegative");
    const auto& c = cliques[q];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw InvalidArgument("clique_cover_labeling: vertex out of range");
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!gr.adjacent(c[i], c[j])) throw InvalidArgument("clique_cover_labeling: a listed set is not a clique");
      cover[c[i]] += g[q];
    }
    lambda += g[q];
  }
  for (std::size_t v = 0; v < n; ++v) {
    const double r = std::abs(cover[v] - w[v]);
    if (r > 1e-9 * (1.0 + w[v])) throw PatternError("cover equation", v, v, r);
  }
  CliqueCoverLabeling out;
  out.cliques = cliques;
  out.g = g;
  out.vectors = Matrix::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(cliques.size(), 1)),
                             static_cast<Eigen::Index>(n + 1));
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    const double s = std::sqrt(g[q]);
    out.vectors(static_cast<Eigen::Index>(q), 0) = s;
    for (Vertex v : cliques[q]) out.vectors(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(v + 1)) = s;
  }
  out.compatible = {linalg::gram(out.vectors), lambda, w};
  if (lambda > 0) out.labeling = labeling_from_compatible(out.compatible, gr);
  return out;
}

struct CliqueWeights {
  std::vector<exact::VertexSet> cliques;  // singletons in vertex order, then edges (u < v) sorted
  std::vector<double> g;
  double lambda = 0;
};

/// Two-coloring of a bipartite graph (component roots get color 0), or
/// InvalidArgument if an odd cycle exists.
inline std::vector<int> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex r = 0; r < n; ++r) {
    if (side[r] >= 0) continue;
    side[r] = 0;
    std::queue<Vertex> q;
    q.push(r);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          throw InvalidArgument("graph is not bipartite (odd cycle through vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + ")");
        }
      }
    }
  }
  return side;
}

/// Optimal clique weights of a bipartite graph read off a maximum flow from
/// the source through U, edges (infinite capacity) and V to the sink.
inline CliqueWeights bipartite_optimal_g(const Graph& gr, const WeightVector& w) {
  require_weights(gr, w);
  const std::size_t n = gr.order();
  const auto side = bipartition(gr);
  flow::Network net(n + 2);
  const std::size_t s = n, t = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0)
      net.add_arc(s, v, w[v]);
    else
      net.add_arc(v, t, w[v]);
  }
  const auto edges = gr.edges();
  for (auto [u, v] : edges) {
    const Vertex a = side[u] == 0 ? u : v, b = side[u] == 0 ? v : u;
    net.add_arc(a, b, flow::kInfinite);
  }
  net.max_flow(s, t);
  CliqueWeights out;
  for (Vertex v = 0; v < n; ++v) {
    const double f = side[v] == 0 ? net.flow(s, v) : net.flow(v, t);
    out.cliques.push_back({v});
    out.g.push_back(std::max(0.0, w[v] - f));
  }
  for (auto [u, v] : edges) {
    const Vertex a = side[u] == 0 ? u : v, b = side[u] == 0 ? v : u;
    out.cliques.push_back({u, v});
    out.g.push_back(std::max(0.0, net.flow(a, b)));
  }
  for (double x : out.g) out.lambda += x;
  return out;
}

}  // namespace lovasz

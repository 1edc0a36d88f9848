#pragma once

// Verifiers for optimality certificates: labeling pairs, compatible-matrix
// pairs with A B' = 0, the equations obtained by deleting row 0, and the
// common eigenbasis of an optimal pair. Verifiers never throw on a failed
// condition; they report residuals.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "lovasz/error.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/labelings.hpp"
#include "lovasz/linalg.hpp"
#include "lovasz/theta.hpp"

namespace lovasz {

/// Relative tolerance of the verifiers; one order looser than the default solver eps.
inline constexpr double kTolVerify = 1e-4;

struct Check {
  std::string check;
  double residual = 0;
  bool pass = true;
};

struct Report {
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  /// Largest residual among checks whose name starts with `prefix` (all checks if empty).
  double residual(const std::string& prefix = "") const {
    double r = 0;
    for (const auto& c : checks)
      if (c.check.rfind(prefix, 0) == 0) r = std::max(r, c.residual);
    return r;
  }
  void add(std::string name, double residual, double bound) {
    checks.push_back({std::move(name), residual, std::isfinite(residual) && residual <= bound});
  }
  void append(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks) checks.push_back({prefix + c.check, c.residual, c.pass});
  }
};

/// A lambda-compatible matrix for G and w, and a 1-compatible matrix for the
/// complement of G and x.
struct OptimalPair {
  CompatibleMatrix a;
  CompatibleMatrix b;
};

/// D B D with D = diag(-1, 1, ..., 1).
inline Matrix flip_border(const Matrix& b) {
  Matrix out = b;
  out.row(0) *= -1.0;
  out.col(0) *= -1.0;
  return out;
}

/// Corner, border, diagonal, zero pattern and psd of A, each with its residual.
inline Report verify_compatible(const SymMatrix& a, const Graph& g, const WeightVector& w, double lambda,
                                double tol = kTolVerify) {
  Report r;
  const std::size_t n = g.order();
  if (a.order() != n + 1 || w.size() != n) {
    r.add("order", std::numeric_limits<double>::infinity(), 0);
    return r;
  }
  const double bound = tol * (1.0 + a.max_abs());
  double border = 0, diag = 0, zeros = 0;
  for (std::size_t v = 0; v < n; ++v) {
    border = std::max(border, std::abs(a(0, v + 1) - w[v]));
    diag = std::max(diag, std::abs(a(v + 1, v + 1) - w[v]));
    for (std::size_t u = v + 1; u < n; ++u)
      if (!g.adjacent(u, v)) zeros = std::max(zeros, std::abs(a(u + 1, v + 1)));
  }
  r.add("corner = lambda", std::abs(a(0, 0) - lambda), bound);
  r.add("border = w", border, bound);
  r.add("diagonal = w", diag, bound);
  r.add("zero on nonadjacent pairs", zeros, bound);
  r.add("psd", std::max(0.0, -linalg::lambda_min(a)), bound);
  return r;
}

inline Report verify_compatible(const CompatibleMatrix& a, const Graph& g, double tol = kTolVerify) {
  return verify_compatible(a.matrix, g, a.w, a.lambda, tol);
}

/// Both matrices individually, then A B' = 0 against tol |A|_F |B|_F. Also
/// reports lambda - w.x (which equals <A, B'>).
inline Report verify_optimal_pair(const OptimalPair& p, const Graph& g, double tol = kTolVerify) {
  Report r;
  r.append(verify_compatible(p.a, g, tol), "A: ");
  r.append(verify_compatible(p.b, complement(g), tol), "B: ");
  if (p.a.matrix.order() != p.b.matrix.order()) {
    r.add("A B' = 0", std::numeric_limits<double>::infinity(), 0);
    return r;
  }
  const Matrix a = p.a.matrix.dense();
  const Matrix bp = flip_border(p.b.matrix.dense());
  const double scale = a.cwiseAbs().maxCoeff() * bp.cwiseAbs().maxCoeff();
  r.add("A B' = 0", (a * bp).cwiseAbs().maxCoeff(), tol * std::max(scale, 1e-300));
  double wx = 0;
  for (std::size_t v = 0; v < p.a.w.size(); ++v) wx += p.a.w[v] * p.b.w[v];
  r.add("lambda - w.x", std::abs(p.a.lambda - wx), tol * (1.0 + std::abs(p.a.lambda)));
  r.add("<A, B'> = lambda - w.x", std::abs(a.cwiseProduct(bp).sum() - (p.a.lambda - wx)),
        tol * std::max(scale, 1.0));
  return r;
}

/// Labeling a of G and b of its complement with c(a_v) = w_v / theta and sum c(a_v) c(b_v) = 1.
inline Report verify_theorem13(const OrthogonalLabeling& a, const OrthogonalLabeling& b, const Graph& g,
                               const WeightVector& w, double theta, double tol = kTolVerify) {
  Report r;
  const std::size_t n = g.order();
  if (a.size() != n || b.size() != n || w.size() != n || !(theta > 0)) {
    r.add("sizes", std::numeric_limits<double>::infinity(), 0);
    return r;
  }
  auto worst = [](const std::vector<Violation>& vs) {
    double m = 0;
    for (const auto& v : vs) m = std::max(m, std::abs(v.dot));
    return m;
  };
  r.add("a orthogonal on nonadjacent pairs of G", worst(validate(a, g, tol)), 0);
  r.add("b orthogonal on nonadjacent pairs of the complement", worst(validate(b, complement(g), tol)), 0);
  double costs = 0;
  for (std::size_t v = 0; v < n; ++v) costs = std::max(costs, std::abs(cost(a.vec(v)) - w[v] / theta));
  r.add("c(a_v) = w_v / theta", costs, tol);
  r.add("sum c(a_v) c(b_v) = 1", std::abs(pairing_sum(a, b) - 1.0), tol);
  return r;
}

/// With Ahat, Bhat the compatible matrices minus row and column 0:
/// Bhat w = theta x, Ahat x = w, Ahat Bhat = w x^T, w.x = theta.
inline Report check_29_5(const Matrix& ahat, const Matrix& bhat, const Vector& w, const Vector& x, double theta,
                         double tol = kTolVerify) {
  Report r;
  const double scale = 1.0 + std::max({ahat.cwiseAbs().maxCoeff(), bhat.cwiseAbs().maxCoeff(), std::abs(theta)});
  const double bound = tol * scale;
  r.add("Bhat w = theta x", (bhat * w - theta * x).cwiseAbs().maxCoeff(), bound);
  r.add("Ahat x = w", (ahat * x - w).cwiseAbs().maxCoeff(), bound);
  r.add("Ahat Bhat = w x^T", (ahat * bhat - w * x.transpose()).cwiseAbs().maxCoeff(), bound);
  r.add("w.x = theta", std::abs(w.dot(x) - theta), bound);
  return r;
}

inline Report check_29_5(const OptimalPair& p, double tol = kTolVerify) {
  const auto n = static_cast<Eigen::Index>(p.a.w.size());
  Vector w(n), x(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    w(v) = p.a.w[static_cast<std::size_t>(v)];
    x(v) = p.b.w[static_cast<std::size_t>(v)];
  }
  return check_29_5(p.a.matrix.dense().bottomRightCorner(n, n), p.b.matrix.dense().bottomRightCorner(n, n), w, x,
                    p.a.lambda, tol);
}

struct EigenStructure {
  std::vector<double> lambda;  // eigenvalues of A on the common eigenvectors
  std::vector<double> mu;      // eigenvalues of B' on the same vectors
  Matrix vectors;              // columns
  double commutator = 0;       // max |A B' - B' A|
  double max_product = 0;      // max |lambda_k mu_k|
  double max_residual = 0;     // max of |A v - lambda v| and |B' v - mu v|
  Report report;
};

/// Common eigenbasis of A and B' from the eigenvectors of A + t B' for a
/// generic t (several are tried; the cleanest split is kept).
inline EigenStructure eigen_structure_report(const Matrix& a, const Matrix& bp, double tol = 1e-7) {
  if (a.rows() != a.cols() || bp.rows() != bp.cols() || a.rows() != bp.rows())
    throw InvalidArgument("eigen_structure_report: matrices must be square and of equal order");
  const double scale = 1.0 + std::max(a.cwiseAbs().maxCoeff(), bp.cwiseAbs().maxCoeff());
  EigenStructure best;
  best.max_residual = std::numeric_limits<double>::infinity();
  for (double t : std::array{0.5772156649015329, 1.2020569031595942, 0.3183098861837907}) {
    const auto e = linalg::eig_sym(SymMatrix::from_dense(a + t * bp, 1e-9 * scale));
    EigenStructure s;
    s.vectors = e.vectors;
    for (Eigen::Index k = 0; k < e.vectors.cols(); ++k) {
      const Vector v = e.vectors.col(k);
      const double l = v.dot(a * v), m = v.dot(bp * v);
      s.lambda.push_back(l);
      s.mu.push_back(m);
      s.max_residual = std::max({s.max_residual, (a * v - l * v).norm(), (bp * v - m * v).norm()});
      s.max_product = std::max(s.max_product, std::abs(l * m));
    }
    if (s.max_residual < best.max_residual) best = std::move(s);
  }
  best.commutator = (a * bp - bp * a).cwiseAbs().maxCoeff();
  best.report.add("A B' = B' A", best.commutator, tol * scale * scale);
  best.report.add("common eigenvectors", best.max_residual, tol * scale);
  best.report.add("lambda_k mu_k = 0", best.max_product, tol * scale * scale);
  return best;
}

/// max |sum_v a_v b_v^T - sqrt(theta) e1 e1^T| after scaling |a_v|^2 = c(b_v),
/// |b_v|^2 = w_v and making first coordinates nonnegative.
inline double pairing_product_residual(const OrthogonalLabeling& a, const OrthogonalLabeling& b, const WeightVector& w,
                               double theta) {
  if (a.size() != b.size() || a.size() != w.size()) throw InvalidArgument("pairing_product_residual: sizes differ");
  Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(a.dim()), static_cast<Eigen::Index>(b.dim()));
  for (std::size_t v = 0; v < a.size(); ++v) {
    Vector av = a.vec(v), bv = b.vec(v);
    const double cb = cost(bv);
    if (cb == 0.0 || w[v] == 0.0) continue;
    if (av.norm() == 0.0) throw InvalidArgument("pairing_product_residual: zero a_v with positive c(b_v)");
    av *= std::sqrt(cb) / av.norm() * (av(0) < 0 ? -1.0 : 1.0);
    bv *= std::sqrt(w[v]) / bv.norm() * (bv(0) < 0 ? -1.0 : 1.0);
    sum += av * bv.transpose();
  }
  sum(0, 0) -= std::sqrt(theta);
  return sum.cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Solver output -> compatible pair

/// From a bracket's dual A (lambda = hi):  lambda Ahat = w w^T + lambda diag(w) - D A D
/// with D = diag(sqrt w). From its primal B (lo = sqrt(w)^T B sqrt(w), y = B sqrt(w)):
/// x_v = y_v^2 / (lo B_vv),  Bhat_uv = y_u y_v B_uv / (lo B_uu B_vv).
inline OptimalPair optimal_pair(const Graph& g, const WeightVector& w, const ThetaBracket& br) {
  require_weights(g, w);
  const std::size_t n = g.order();
  if (br.primal_B.order() != n || br.dual_A.order() != n)
    throw InvalidArgument("optimal_pair: bracket matrices have the wrong order");
  if (!(br.hi > 0)) throw InvalidArgument("optimal_pair: theta must be positive");
  const auto N = static_cast<Eigen::Index>(n);
  Vector sw(N), wv(N);
  for (Eigen::Index v = 0; v < N; ++v) {
    wv(v) = w[static_cast<std::size_t>(v)];
    sw(v) = std::sqrt(wv(v));
  }
  const double lambda = br.hi;
  Matrix a(N + 1, N + 1);
  a(0, 0) = lambda;
  a.block(0, 1, 1, N) = wv.transpose();
  a.block(1, 0, N, 1) = wv;
  a.bottomRightCorner(N, N) =
      (wv * wv.transpose() + lambda * Matrix(wv.asDiagonal()) - sw.asDiagonal() * br.dual_A.dense() * sw.asDiagonal()) /
      lambda;
  for (Eigen::Index v = 0; v < N; ++v) a(v + 1, v + 1) = wv(v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) a(static_cast<Eigen::Index>(u + 1), static_cast<Eigen::Index>(v + 1)) =
          a(static_cast<Eigen::Index>(v + 1), static_cast<Eigen::Index>(u + 1)) = 0.0;

  const Matrix bm = br.primal_B.dense();
  const Vector y = bm * sw;
  const double lo = sw.dot(y);
  if (!(lo > 0)) throw InvalidArgument("optimal_pair: primal value must be positive");
  Vector scale = Vector::Zero(N);  // y_v / (sqrt(lo) B_vv)
  for (Eigen::Index v = 0; v < N; ++v)
    if (bm(v, v) > 0) scale(v) = y(v) / (std::sqrt(lo) * bm(v, v));
  Matrix b(N + 1, N + 1);
  const Matrix inner = scale.asDiagonal() * bm * scale.asDiagonal();
  std::vector<double> x(n);
  for (Eigen::Index v = 0; v < N; ++v) x[static_cast<std::size_t>(v)] = inner(v, v);
  b(0, 0) = 1.0;
  for (Eigen::Index v = 0; v < N; ++v) b(0, v + 1) = b(v + 1, 0) = inner(v, v);
  b.bottomRightCorner(N, N) = inner;
  for (auto [u, v] : g.edges())
    b(static_cast<Eigen::Index>(u + 1), static_cast<Eigen::Index>(v + 1)) =
        b(static_cast<Eigen::Index>(v + 1), static_cast<Eigen::Index>(u + 1)) = 0.0;

  return {{SymMatrix::from_dense(a, 1e-9 * (1.0 + lambda)), lambda, w},
          {SymMatrix::from_dense(b, 1e-9), 1.0, WeightVector(x)}};
}

}  // namespace lovasz

#pragma once

// Certified brackets for the weighted Lovasz number, closed forms for the
// standard families, spectral (Hoffman) bounds, and TH membership.
//
// The solver is a feasible-start primal-dual interior-point method on
//   max <W, B>  s.t.  tr B = 1,  B_uv = 0 (u ~ v),  B psd
//   min y0      s.t.  y0 I + sum_e y_e (e_i e_j^T + e_j e_i^T) - W psd
// where W_uv = sqrt(w_u w_v). Both iterates are turned into exactly feasible
// matrices before their objective values are reported, so the bracket never
// depends on how well the iteration converged.

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <vector>

#include "lovasz/error.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/linalg.hpp"

namespace lovasz {

using linalg::Matrix;
using linalg::SymMatrix;
using linalg::Vector;

struct ThetaOptions {
  double eps = 1e-5;
  std::size_t max_iterations = 200;
  /// After the bracket closes, keep iterating toward a duality gap of
  /// polish_gap * (1 + theta) so that derived certificates are tight.
  double polish_gap = 1e-11;
};

struct ThetaBracket {
  double lo = 0;
  double hi = 0;
  SymMatrix primal_B;  // psd, trace 1, zero on edges
  SymMatrix dual_A;    // diagonal w, sqrt(w_u w_v) off the edges
  std::size_t iterations = 0;
  double eps_requested = 0;
  bool tolerance_met = true;

  double gap() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x, double slack = 0) const { return lo - slack <= x && x <= hi + slack; }
};

namespace detail {

inline double sqrt_product(double a, double b) { return std::sqrt(a) * std::sqrt(b); }

/// Edge-zeroed copy of X shifted by a multiple of I until provably psd, then
/// trace-normalised. Returns the matrix and sum W_uv B_uv.
inline std::pair<SymMatrix, double> certify_primal(const Graph& g, const std::vector<double>& w, const Matrix& x) {
  const std::size_t n = g.order();
  Matrix b = 0.5 * (x + x.transpose());
  for (auto [u, v] : g.edges()) {
    b(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 0.0;
    b(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 0.0;
  }
  SymMatrix bs = SymMatrix::from_dense(b);
  const auto neg = linalg::certified_lambda_max(SymMatrix::from_dense(-b));
  const double lmin = -neg.value;
  if (lmin - neg.margin < 0) {
    const double shift = neg.margin - lmin;
    b += shift * Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  }
  b /= b.trace();
  bs = SymMatrix::from_dense(b);
  double sum = 0, mag = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const double t = sqrt_product(w[u], w[v]) * bs(u, v);
      sum += t;
      mag += std::abs(t);
    }
  const double roundoff = 4.0 * static_cast<double>(n * n + 1) * std::numeric_limits<double>::epsilon() * mag;
  return {bs, sum - roundoff};
}

/// Feasible matrix: W off the edges, given values on the edges.
inline SymMatrix feasible_matrix(const Graph& g, const std::vector<double>& w, const std::vector<double>& edge_values) {
  const std::size_t n = g.order();
  SymMatrix a(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) a.set(u, v, u == v ? w[u] : sqrt_product(w[u], w[v]));
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) a.set(edges[e].first, edges[e].second, edge_values[e]);
  return a;
}

struct IpmOutcome {
  double lo = 0, hi = 0;
  SymMatrix primal, dual;
  std::size_t iterations = 0;
  bool met = false;
};

inline bool positive_definite(const Matrix& m) {
  Eigen::LLT<Matrix> llt(m);
  return llt.info() == Eigen::Success;
}

inline double step_length(const Matrix& base, const Matrix& dir) {
  double alpha = 1.0;
  while (!positive_definite(base + alpha * dir)) {
    alpha *= 0.8;
    if (alpha < 1e-12) return 0.0;
  }
  return alpha < 1.0 ? 0.95 * alpha : alpha;
}

// Graph on the support of w (all weights > 0).
inline IpmOutcome ipm(const Graph& g, const std::vector<double>& w, const ThetaOptions& opt) {
  const std::size_t n = g.order();
  const auto N = static_cast<Eigen::Index>(n);
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const double s = *std::max_element(w.begin(), w.end());
  Vector c(N);
  for (std::size_t v = 0; v < n; ++v) c(static_cast<Eigen::Index>(v)) = std::sqrt(w[v] / s);
  const Matrix C = c * c.transpose();
  const Matrix I = Matrix::Identity(N, N);

  Matrix X = I / static_cast<double>(n);
  double y0 = 1.1 * c.squaredNorm() + 1.0;
  Vector y = Vector::Zero(static_cast<Eigen::Index>(m));
  auto dual_slack = [&](double t0, const Vector& ye) {
    Matrix z = t0 * I - C;
    for (std::size_t e = 0; e < m; ++e) {
      const auto [i, j] = edges[e];
      z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += ye(static_cast<Eigen::Index>(e));
      z(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) += ye(static_cast<Eigen::Index>(e));
    }
    return z;
  };
  Matrix Z = dual_slack(y0, y);
  double mu = Z.cwiseProduct(X).sum() / (2.0 * static_cast<double>(n));

  IpmOutcome out;
  out.lo = -std::numeric_limits<double>::infinity();
  out.hi = std::numeric_limits<double>::infinity();
  auto certify = [&] {
    auto [b, lo] = certify_primal(g, w, X);
    if (lo > out.lo) {
      out.lo = lo;
      out.primal = std::move(b);
    }
    std::vector<double> ev(m);
    for (std::size_t e = 0; e < m; ++e) {
      const auto [i, j] = edges[e];
      ev[e] = sqrt_product(w[i], w[j]) - s * y(static_cast<Eigen::Index>(e));
    }
    SymMatrix a = feasible_matrix(g, w, ev);
    const double hi = linalg::certified_lambda_max(a).upper();
    if (hi < out.hi) {
      out.hi = hi;
      out.dual = std::move(a);
    }
  };

  double target = opt.eps / 10.0;
  const auto K = static_cast<Eigen::Index>(m + 1);
  Matrix M(K, K);
  Vector rhs(K);
  std::size_t it = 0;
  for (; it < opt.max_iterations; ++it) {
    const double gap = (y0 - C.cwiseProduct(X).sum()) * s;
    if (!out.met && gap <= target) {
      certify();
      if (out.hi - out.lo <= opt.eps) {
        out.met = true;
      } else {
        target *= 0.1;
      }
    }
    if (out.met && gap <= opt.polish_gap * (1.0 + out.hi)) break;

    Eigen::LLT<Matrix> zf(Z);
    if (zf.info() != Eigen::Success) break;
    const Matrix Zi = zf.solve(I);
    const Matrix P = X * Zi;

    M(0, 0) = Zi.cwiseProduct(X).sum();
    rhs(0) = mu * Zi.trace() - 1.0;
    for (std::size_t e = 0; e < m; ++e) {
      const auto i = static_cast<Eigen::Index>(edges[e].first), j = static_cast<Eigen::Index>(edges[e].second);
      const auto r = static_cast<Eigen::Index>(e + 1);
      M(0, r) = P(i, j) + P(j, i);
      M(r, 0) = P(i, j) + P(j, i);
      rhs(r) = 2.0 * mu * Zi(i, j);
      for (std::size_t f = 0; f < m; ++f) {
        const auto k = static_cast<Eigen::Index>(edges[f].first), l = static_cast<Eigen::Index>(edges[f].second);
        M(r, static_cast<Eigen::Index>(f + 1)) =
            Zi(j, k) * X(l, i) + Zi(j, l) * X(k, i) + Zi(i, k) * X(l, j) + Zi(i, l) * X(k, j);
      }
    }
    const Vector dy = M.partialPivLu().solve(rhs);
    if (!dy.allFinite()) break;
    Matrix dZ = dy(0) * I;
    for (std::size_t e = 0; e < m; ++e) {
      const auto i = static_cast<Eigen::Index>(edges[e].first), j = static_cast<Eigen::Index>(edges[e].second);
      dZ(i, j) += dy(static_cast<Eigen::Index>(e + 1));
      dZ(j, i) += dy(static_cast<Eigen::Index>(e + 1));
    }
    Matrix dX = mu * Zi - X - Zi * dZ * X;
    dX = (0.5 * (dX + dX.transpose())).eval();

    const double ap = step_length(X, dX);
    const double ad = step_length(Z, dZ);
    if (ap < 1e-10 && ad < 1e-10) break;

    X += ap * dX;
    for (auto [u, v] : edges) {
      X(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 0.0;
      X(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 0.0;
    }
    X /= X.trace();
    y0 += ad * dy(0);
    y += ad * dy.tail(static_cast<Eigen::Index>(m));
    Z = dual_slack(y0, y);

    mu = Z.cwiseProduct(X).sum() / (2.0 * static_cast<double>(n));
    if (ap + ad > 1.8) mu /= 2.0;
  }
  certify();
  out.met = out.hi - out.lo <= opt.eps;
  out.iterations = it;
  return out;
}

}  // namespace detail

/// Certified bracket [lo, hi] for theta(G, w) with witnesses. Zero-weight
/// vertices are dropped before solving and come back as zero rows.
inline ThetaBracket theta(const Graph& g, const WeightVector& w, const ThetaOptions& opt = {}) {
  require_weights(g, w);
  if (!(opt.eps > 0)) throw InvalidArgument("theta: eps must be positive");
  const std::size_t n = g.order();
  ThetaBracket out;
  out.eps_requested = opt.eps;
  out.primal_B = SymMatrix(n);
  out.dual_A = SymMatrix(n);
  std::vector<Vertex> support;
  for (Vertex v = 0; v < n; ++v)
    if (w[v] > 0) support.push_back(v);
  if (support.empty()) {
    for (Vertex v = 0; v < n; ++v) out.primal_B.set(v, v, 1.0 / static_cast<double>(n));
    return out;
  }
  const Graph h = induced(g, support);
  std::vector<double> ws;
  for (Vertex v : support) ws.push_back(w[v]);
  const std::size_t k = support.size();
  if (h.size() == k * (k - 1) / 2) {
    // Complete: A = diag(w) and B = e_v e_v^T at a heaviest v, both exact.
    const std::size_t top = static_cast<std::size_t>(std::max_element(ws.begin(), ws.end()) - ws.begin());
    for (std::size_t i = 0; i < k; ++i) out.dual_A.set(support[i], support[i], ws[i]);
    out.primal_B.set(support[top], support[top], 1.0);
    out.lo = out.hi = ws[top];
    return out;
  }
  const auto r = detail::ipm(h, ws, opt);
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i; j < support.size(); ++j) {
      out.primal_B.set(support[i], support[j], r.primal(i, j));
      out.dual_A.set(support[i], support[j], r.dual(i, j));
    }
  out.lo = r.lo;
  out.hi = std::max(r.hi, r.lo);
  out.iterations = r.iterations;
  out.tolerance_met = r.met;
  return out;
}

inline ThetaBracket theta(const Graph& g, double eps = 1e-5) {
  ThetaOptions opt;
  opt.eps = eps;
  return theta(g, WeightVector::ones(g.order()), opt);
}

inline ThetaBracket theta(const Graph& g, const WeightVector& w, double eps) {
  ThetaOptions opt;
  opt.eps = eps;
  return theta(g, w, opt);
}

// ---------------------------------------------------------------------------
// Independent bounds from given matrices

/// Upper bound Lambda(A) + margin for a feasible matrix A (diagonal w,
/// sqrt(w_u w_v) on nonadjacent pairs, anything on edges).
inline double dual_value(const Graph& g, const WeightVector& w, const SymMatrix& a, double tol = 1e-10) {
  require_weights(g, w);
  if (a.order() != g.order()) throw InvalidArgument("dual_value: matrix order differs from vertex count");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u; v < g.order(); ++v) {
      if (u != v && g.adjacent(u, v)) continue;
      const double want = u == v ? w[u] : detail::sqrt_product(w[u], w[v]);
      const double r = std::abs(a(u, v) - want);
      if (r > tol * (1.0 + std::abs(want))) throw PatternError(u == v ? "feasible diagonal" : "feasible nonadjacent entry", u, v, r);
    }
  return linalg::certified_lambda_max(a).upper();
}

/// Lower bound sum sqrt(w_u w_v) B_uv for B psd, trace 1, zero on edges.
inline double primal_value(const Graph& g, const WeightVector& w, const SymMatrix& b, double tol = 1e-10) {
  require_weights(g, w);
  const std::size_t n = g.order();
  if (b.order() != n) throw InvalidArgument("primal_value: matrix order differs from vertex count");
  if (std::abs(b.trace() - 1.0) > tol) throw PatternError("trace = 1", 0, 0, std::abs(b.trace() - 1.0));
  for (auto [u, v] : g.edges())
    if (std::abs(b(u, v)) > tol) throw PatternError("zero on edges", u, v, std::abs(b(u, v)));
  if (n > 0) {
    const double lmin = linalg::lambda_min(b);
    if (lmin < -linalg::kTolPsd * (1.0 + b.max_abs())) throw NotPsdError(lmin);
  }
  double sum = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) sum += detail::sqrt_product(w[u], w[v]) * b(u, v);
  return sum;
}

/// Lambda(B) for B psd with diagonal w and zeros on the edges of G; a lower bound on theta(G, w).
inline double theta6_check(const Graph& g, const WeightVector& w, const SymMatrix& b, double tol = 1e-10) {
  require_weights(g, w);
  const std::size_t n = g.order();
  if (b.order() != n) throw InvalidArgument("theta6_check: matrix order differs from vertex count");
  for (Vertex v = 0; v < n; ++v)
    if (std::abs(b(v, v) - w[v]) > tol * (1.0 + w[v])) throw PatternError("diagonal = w", v, v, std::abs(b(v, v) - w[v]));
  for (auto [u, v] : g.edges())
    if (std::abs(b(u, v)) > tol) throw PatternError("zero on edges", u, v, std::abs(b(u, v)));
  if (n == 0) return 0.0;
  const auto e = linalg::eig_sym(b);
  const double lmin = e.values(e.values.size() - 1);
  if (lmin < -linalg::kTolPsd * (1.0 + b.max_abs())) throw NotPsdError(lmin);
  return e.values(0);
}

/// 1 + Lambda(B)/Lambda(-B) for B with zero diagonal and zeros on the edges of G.
inline double spectral_ratio_value(const Graph& g, const SymMatrix& b, double tol = 1e-10) {
  const std::size_t n = g.order();
  if (b.order() != n) throw InvalidArgument("spectral_ratio_value: matrix order differs from vertex count");
  for (Vertex v = 0; v < n; ++v)
    if (std::abs(b(v, v)) > tol) throw PatternError("zero diagonal", v, v, std::abs(b(v, v)));
  for (auto [u, v] : g.edges())
    if (std::abs(b(u, v)) > tol) throw PatternError("zero on edges", u, v, std::abs(b(u, v)));
  if (n == 0) return 1.0;
  const auto e = linalg::eig_sym(b);
  const double top = e.values(0), bottom = -e.values(e.values.size() - 1);
  if (bottom <= 0) return 1.0;
  return 1.0 + top / bottom;
}

// ---------------------------------------------------------------------------
// Closed forms

inline double theta_odd_cycle(std::size_t n) {
  const double c = std::cos(std::numbers::pi / static_cast<double>(n));
  return static_cast<double>(n) * c / (1.0 + c);
}

inline double theta_odd_cycle_complement(std::size_t n) {
  const double c = std::cos(std::numbers::pi / static_cast<double>(n));
  return (1.0 + c) / c;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {

// w = a (x) b on an n1 x n2 grid, if rank one.
inline std::optional<std::pair<WeightVector, WeightVector>> factor_weights(const WeightVector& w, std::size_t n1,
                                                                           std::size_t n2) {
  if (n1 == 0 || n2 == 0) return std::nullopt;
  std::size_t r = 0;
  double best = -1;
  for (std::size_t i = 0; i < n1; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < n2; ++j) s += w[i * n2 + j];
    if (s > best) best = s, r = i;
  }
  std::vector<double> b(n2), a(n1);
  double bb = 0;
  for (std::size_t j = 0; j < n2; ++j) bb += (b[j] = w[r * n2 + j]) * b[j];
  if (bb == 0) return std::make_pair(WeightVector(std::vector<double>(n1, 0.0)), WeightVector(b));
  for (std::size_t i = 0; i < n1; ++i) {
    double d = 0;
    for (std::size_t j = 0; j < n2; ++j) d += w[i * n2 + j] * b[j];
    a[i] = std::max(0.0, d / bb);
  }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      if (std::abs(w[i * n2 + j] - a[i] * b[j]) > 1e-12 * (1.0 + w.max())) return std::nullopt;
  return std::make_pair(WeightVector(a), WeightVector(b));
}

inline WeightVector slice(const WeightVector& w, std::size_t from, std::size_t count) {
  return WeightVector(std::vector<double>(w.values().begin() + static_cast<std::ptrdiff_t>(from),
                                          w.values().begin() + static_cast<std::ptrdiff_t>(from + count)));
}

}  // namespace detail

/// Exact theta for graphs carrying family metadata, or nothing.
inline std::optional<double> closed_form(const Graph& g, const WeightVector& w) {
  require_weights(g, w);
  const FamilyTag* tag = g.family();
  if (!tag) return std::nullopt;
  const std::size_t n = g.order();
  const bool ones = w.all_ones();
  switch (tag->kind) {
    case Family::Complete: return w.max();
    case Family::Empty: return w.sum();
    case Family::Cycle:
      if (!ones) return std::nullopt;
      return n % 2 ? theta_odd_cycle(n) : static_cast<double>(n) / 2.0;
    case Family::Path:
      if (!ones) return std::nullopt;
      return static_cast<double>((n + 1) / 2);
    case Family::Kneser:
      if (!ones || tag->params.size() != 3 || tag->params[2] != 0) return std::nullopt;
      return static_cast<double>(binomial(tag->params[0] - 1, tag->params[1] - 1));
    case Family::CompleteBipartite: {
      const auto a = static_cast<std::size_t>(tag->params.at(0));
      double left = 0, right = 0;
      for (std::size_t v = 0; v < n; ++v) (v < a ? left : right) += w[v];
      return std::max(left, right);
    }
    case Family::Complement: {
      const Graph& child = *tag->first;
      const FamilyTag* ct = child.family();
      if (!ct) return std::nullopt;
      switch (ct->kind) {
        case Family::Complete: return w.sum();
        case Family::Empty: return w.max();
        case Family::CompleteBipartite: {
          const auto a = static_cast<std::size_t>(ct->params.at(0));
          double left = 0, right = 0;
          for (std::size_t v = 0; v < n; ++v) (v < a ? left : right) = std::max(v < a ? left : right, w[v]);
          return left + right;
        }
        case Family::Path:
          if (!ones) return std::nullopt;
          return n == 0 ? 0.0 : (n == 1 ? 1.0 : 2.0);
        case Family::Cycle:
          if (!ones) return std::nullopt;
          return n % 2 ? theta_odd_cycle_complement(n) : 2.0;
        case Family::Kneser: {
          if (!ones) return std::nullopt;
          const auto inner = closed_form(child, w);
          if (!inner || *inner == 0) return std::nullopt;
          return static_cast<double>(n) / *inner;
        }
        default: return std::nullopt;
      }
    }
    case Family::DirectSum:
    case Family::DirectCosum: {
      const std::size_t n1 = tag->first->order(), n2 = tag->second->order();
      const auto t1 = closed_form(*tag->first, detail::slice(w, 0, n1));
      const auto t2 = closed_form(*tag->second, detail::slice(w, n1, n2));
      if (!t1 || !t2) return std::nullopt;
      return tag->kind == Family::DirectSum ? *t1 + *t2 : std::max(*t1, *t2);
    }
    case Family::StrongProduct:
    case Family::Coproduct: {
      const auto f = detail::factor_weights(w, tag->first->order(), tag->second->order());
      if (!f) return std::nullopt;
      const auto t1 = closed_form(*tag->first, f->first);
      const auto t2 = closed_form(*tag->second, f->second);
      if (!t1 || !t2) return std::nullopt;
      return *t1 * *t2;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spectral bounds

/// n Lambda(-B) / (Lambda(B) + Lambda(-B)) from the adjacency spectrum of a regular graph.
inline double hoffman_bound(const Graph& g) {
  if (!g.regular_degree()) throw InvalidArgument("hoffman_bound: graph is not regular");
  const std::size_t n = g.order();
  if (g.size() == 0) return static_cast<double>(n);
  const auto e = linalg::eig_sym(linalg::adjacency_matrix(g));
  const double top = e.values(0), neg = -e.values(e.values.size() - 1);
  return static_cast<double>(n) * neg / (top + neg);
}

/// Integer adjacency spectrum of P(m, 2, 0): n, largest, second and smallest eigenvalue.
struct KneserSpectrum {
  long n, lambda1, lambda2, lambda_n;
};

inline KneserSpectrum kneser_pair_spectrum(long m) {
  if (m < 4) throw InvalidArgument("kneser_pair_spectrum: need m >= 4");
  return {binomial(m, 2), binomial(m - 2, 2), 1, 3 - m};
}

/// (lambda1 - lambda_n)(n - lambda1 + lambda2) and -lambda_n (lambda2 + 1) n.
inline std::pair<long, long> eigenvalue_identity_sides(const KneserSpectrum& s) {
  return {(s.lambda1 - s.lambda_n) * (s.n - s.lambda1 + s.lambda2), -s.lambda_n * (s.lambda2 + 1) * s.n};
}

/// Hoffman bound of P(m, 2, 0) as a reduced fraction from the integer spectrum.
inline std::pair<long, long> hoffman_bound_exact(const KneserSpectrum& s) {
  long num = s.n * -s.lambda_n, den = s.lambda1 - s.lambda_n;
  const long d = std::gcd(num, den);
  return {num / d, den / d};
}

// ---------------------------------------------------------------------------
// TH membership and vertex-symmetric products

enum class Membership { Inside, Outside, Undetermined };

struct MembershipResult {
  Membership verdict;
  ThetaBracket bracket;  // for theta(complement(G), x)
};

/// x in TH(G) iff theta(complement(G), x) <= 1.
inline MembershipResult th_membership(const Graph& g, const std::vector<double>& x, double eps = 1e-6) {
  if (x.size() != g.order()) throw InvalidArgument("th_membership: vector length differs from vertex count");
  for (double v : x)
    if (!(v >= 0)) throw InvalidArgument("th_membership: x must be nonnegative");
  auto b = theta(complement(g), WeightVector(x), eps);
  const Membership m = b.hi <= 1.0 ? Membership::Inside : b.lo > 1.0 ? Membership::Outside : Membership::Undetermined;
  return {m, std::move(b)};
}

struct SymmetricProduct {
  ThetaBracket g, gbar;
  double product = 0;  // midpoint product
  double lo = 0, hi = 0;
  std::size_t n = 0;
};

/// theta(G) theta(complement G) for a vertex-symmetric G (expected to equal n).
inline SymmetricProduct vertex_symmetric_product_check(const Graph& g, double eps = 1e-6) {
  SymmetricProduct out;
  out.g = theta(g, eps);
  out.gbar = theta(complement(g), eps);
  out.product = out.g.mid() * out.gbar.mid();
  out.lo = out.g.lo * out.gbar.lo;
  out.hi = out.g.hi * out.gbar.hi;
  out.n = g.order();
  return out;
}

}  // namespace lovasz

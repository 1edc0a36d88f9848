#pragma once

// Dense symmetric linear algebra: a cyclic Jacobi eigensolver, Householder
// embedding of unit vectors, orthogonal-basis completion, spectral PSD
// factorisation and closed-form circulant spectra.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

#include "lovasz/error.hpp"
#include "lovasz/graph.hpp"

namespace lovasz::linalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kTolOrth = 1e-9;
inline constexpr double kTolEig = 1e-9;
inline constexpr double kTolPsd = 1e-8;

/// Real symmetric matrix; every write updates both mirror entries.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : m_(Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))) {}

  /// Takes a dense matrix that must already be symmetric to within `tol`
  /// (relative to its largest entry); the mean of mirror entries is stored.
  static SymMatrix from_dense(const Matrix& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) throw InvalidArgument("SymMatrix needs a square matrix");
    const double scale = 1.0 + (a.size() ? a.cwiseAbs().maxCoeff() : 0.0);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = i + 1; j < a.cols(); ++j)
        if (std::abs(a(i, j) - a(j, i)) > tol * scale)
          throw PatternError("symmetry", static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                             std::abs(a(i, j) - a(j, i)));
    SymMatrix s;
    s.m_ = 0.5 * (a + a.transpose());
    return s;
  }

  std::size_t order() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  void set(std::size_t i, std::size_t j, double x) {
    m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
    m_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = x;
  }
  const Matrix& dense() const noexcept { return m_; }
  double max_abs() const { return m_.size() ? m_.cwiseAbs().maxCoeff() : 0.0; }
  double trace() const { return m_.trace(); }

 private:
  Matrix m_;
};

/// A = Q diag(values) Q^T, values sorted descending.
struct EigenDecomposition {
  Matrix vectors;
  Vector values;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is at most
/// 1e-12 ||A||_F. Eigenvalues sorted descending; ties keep rotation-basis order.
inline EigenDecomposition eig_sym(const SymMatrix& sym, int max_sweeps = 100) {
  const Eigen::Index n = static_cast<Eigen::Index>(sym.order());
  Matrix a = sym.dense();
  Matrix v = Matrix::Identity(n, n);
  const double fro = a.norm();
  auto off_norm = [&] {
    double s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  int sweep = 0;
  for (;; ++sweep) {
    if (fro == 0.0 || off_norm() <= 1e-12 * fro) break;
    if (sweep >= max_sweeps) throw SolverError("eig_sym: Jacobi iteration cap exceeded");
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J the (p, q) plane rotation [[c, s], [-s, c]].
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  EigenDecomposition out{Matrix(n, n), Vector(n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src);
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

/// Largest eigenvalue.
inline double lambda_max(const SymMatrix& a) {
  if (a.order() == 0) return 0.0;
  return eig_sym(a).values(0);
}

/// Smallest eigenvalue.
inline double lambda_min(const SymMatrix& a) {
  if (a.order() == 0) return 0.0;
  const auto e = eig_sym(a);
  return e.values(e.values.size() - 1);
}

/// Max-entry deviation of Q^T Q from the identity.
inline double orthogonality_defect(const Matrix& q) {
  if (q.size() == 0) return 0.0;
  return (q.transpose() * q - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

/// Computed top eigenvalue together with a bound on how far the true one can sit above it.
struct SpectralBound {
  double value = 0;
  double margin = 0;
  double upper() const { return value + margin; }
  double lower() const { return value - margin; }
};

/// Lambda(A) with a Weyl-type margin from the eigen-residual
/// ||A - Q L Q^T||_F, the orthogonality defect of Q, and summation roundoff.
inline SpectralBound certified_lambda_max(const SymMatrix& a) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.order());
  if (n == 0) return {};
  const auto e = eig_sym(a);
  const Matrix recon = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
  const double resid = (a.dense() - recon).norm();
  const double orth = (e.vectors.transpose() * e.vectors - Matrix::Identity(n, n)).norm();
  const double big = e.values.cwiseAbs().maxCoeff();
  const double roundoff = 8.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * (a.dense().norm() + big);
  return {e.values(0), resid + big * orth + roundoff};
}

/// Orthogonal d x d matrix whose first column is the unit vector x:
/// identity when x = e1, else the reflector I - 2 y y^T.
inline Matrix householder_embed(const Vector& x, double tol = 1e-10) {
  const Eigen::Index d = x.size();
  if (d == 0) throw InvalidArgument("householder_embed: empty vector");
  if (std::abs(x.norm() - 1.0) > tol) throw InvalidArgument("householder_embed: input is not a unit vector");
  const double rest2 = x.tail(d - 1).squaredNorm();
  if (rest2 == 0.0 && x(0) > 0) return Matrix::Identity(d, d);
  // 1 - x1, computed without cancellation when x1 is near 1.
  const double one_minus = x(0) > 0 ? rest2 / (1.0 + x(0)) : 1.0 - x(0);
  Vector y(d);
  y(0) = std::sqrt(one_minus / 2.0);
  for (Eigen::Index j = 1; j < d; ++j) y(j) = -x(j) / (2.0 * y(0));
  return Matrix::Identity(d, d) - 2.0 * y * y.transpose();
}

/// Orthogonal d x d matrix whose first k columns are the given mutually
/// perpendicular unit vectors (columns of `cols`), built one reflector at a time.
inline Matrix complete_orthogonal(const Matrix& cols, double tol = kTolOrth) {
  const Eigen::Index d = cols.rows(), k = cols.cols();
  if (k > d) throw InvalidArgument("complete_orthogonal: more vectors than dimensions");
  if (k == 0) return Matrix::Identity(d, d);
  if (orthogonality_defect(cols) > tol) throw InvalidArgument("complete_orthogonal: input is not orthonormal");
  Matrix q = householder_embed(cols.col(0), tol);
  for (Eigen::Index i = 1; i < k; ++i) {
    const Vector y = q.transpose() * cols.col(i);
    Vector tail = y.tail(d - i);
    tail /= tail.norm();
    const Matrix r = householder_embed(tail, tol);
    q.rightCols(d - i) = q.rightCols(d - i) * r;
  }
  return q;
}

/// X with B = X^T X (column v of X is a vector for index v), via the spectral
/// square root; eigenvalues in [-tol*(1+max|B|), 0) are clamped to zero.
inline Matrix psd_factor(const SymMatrix& b, double tol = kTolPsd) {
  const Eigen::Index n = static_cast<Eigen::Index>(b.order());
  if (n == 0) return Matrix(0, 0);
  const auto e = eig_sym(b);
  const double lmin = e.values(n - 1);
  if (lmin < -tol * (1.0 + b.max_abs())) throw NotPsdError(lmin);
  const Vector root = e.values.cwiseMax(0.0).cwiseSqrt();
  return root.asDiagonal() * e.vectors.transpose();
}

/// Gram matrix X^T X of the columns of X.
inline SymMatrix gram(const Matrix& x) { return SymMatrix::from_dense(x.transpose() * x, 1e-9); }

/// Eigenvalues sum_j a_j w^{kj}, w = e^{2 pi i / n}, of the circulant with first
/// row a (k = 0..n-1). The coefficients must satisfy a_j = a_{n-j}.
inline std::vector<double> circulant_eigenvalues(std::span<const double> a, double tol = 1e-12) {
  const std::size_t n = a.size();
  double scale = 1.0;
  for (double x : a) scale = std::max(scale, 1.0 + std::abs(x));
  for (std::size_t j = 1; j < n; ++j)
    if (std::abs(a[j] - a[n - j]) > tol * scale)
      throw InvalidArgument("circulant_eigenvalues: coefficients are not symmetric (a_j != a_{n-j})");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double re = 0, im = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
      re += a[j] * std::cos(ang);
      im += a[j] * std::sin(ang);
    }
    if (std::abs(im) > 1e-9 * scale * static_cast<double>(n))
      throw SolverError("circulant_eigenvalues: non-negligible imaginary part");
    out[k] = re;
  }
  return out;
}

/// Circulant matrix with first row a.
inline SymMatrix circulant_matrix(std::span<const double> a) {
  const std::size_t n = a.size();
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[(j + n - i) % n];
  return SymMatrix::from_dense(m);
}

/// 0/1 adjacency matrix.
inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix b(g.order());
  for (auto [u, v] : g.edges()) b.set(u, v, 1.0);
  return b;
}

}  // namespace lovasz::linalg

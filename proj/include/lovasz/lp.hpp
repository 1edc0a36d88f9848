#pragma once

// Dense two-phase tableau simplex for  max c.x  s.t.  A x <= b, x >= 0,
// with Bland's rule and dual values read off the final objective row.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "lovasz/error.hpp"

namespace lovasz::lp {

enum class Status { Optimal, Unbounded, Infeasible, CyclingGuard };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Unbounded: return "unbounded";
    case Status::Infeasible: return "infeasible";
    case Status::CyclingGuard: return "cycling guard";
  }
  return "?";
}

struct LPResult {
  Status status = Status::Infeasible;
  double optimum = 0;
  std::vector<double> solution;  // x, one entry per column of A
  std::vector<double> dual;      // y >= 0, one entry per row of A
  std::size_t pivots = 0;
};

inline constexpr double kPivotTol = 1e-9;

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0) {}
  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (cols_ + 1) + c]; }
  // Row `rows_` is the objective row, column `cols_` the right-hand side.
  double& obj(std::size_t c) { return at(rows_, c); }
  double& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> t_;
};

// Runs Bland-rule pivots on columns [0, allowed) until the objective row
// (storing z_j - c_j) is nonnegative. Returns the terminal status.
inline Status run(Tableau& t, std::vector<std::size_t>& basis, std::size_t allowed, std::size_t& pivots,
                  std::size_t cap) {
  while (true) {
    std::size_t enter = allowed;
    for (std::size_t c = 0; c < allowed; ++c)
      if (t.obj(c) < -kPivotTol) {
        enter = c;
        break;
      }
    if (enter == allowed) return Status::Optimal;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r)
      if (t.at(r, enter) > kPivotTol) best = std::min(best, t.rhs(r) / t.at(r, enter));
    std::size_t leave = t.rows();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.at(r, enter) <= kPivotTol) continue;
      if (t.rhs(r) / t.at(r, enter) <= best + 1e-12 && (leave == t.rows() || basis[r] < basis[leave])) leave = r;
    }
    if (leave == t.rows()) return Status::Unbounded;
    if (++pivots > cap) return Status::CyclingGuard;
    t.pivot(leave, enter);
    basis[leave] = enter;
  }
}

}  // namespace detail

/// max c.x subject to A x <= b, x >= 0. A is given row-major as rows of length c.size().
inline LPResult lp_solve(const std::vector<double>& c, const std::vector<std::vector<double>>& a,
                         const std::vector<double>& b) {
  const std::size_t n = c.size(), m = a.size();
  if (b.size() != m) throw InvalidArgument("lp_solve: b has wrong length");
  for (const auto& row : a)
    if (row.size() != n) throw InvalidArgument("lp_solve: ragged constraint matrix");
  for (double x : c)
    if (!std::isfinite(x)) throw InvalidArgument("lp_solve: non-finite objective");
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(b[i])) throw InvalidArgument("lp_solve: non-finite right-hand side");
    for (double x : a[i])
      if (!std::isfinite(x)) throw InvalidArgument("lp_solve: non-finite constraint entry");
  }

  // Columns: x (n), slacks (m), artificials (one per row with b < 0).
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) art_row.push_back(i);
  const std::size_t k = art_row.size();
  const std::size_t slack0 = n, art0 = n + m, cols = n + m + k;
  detail::Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sgn = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sgn * a[i][j];
    t.at(i, slack0 + i) = sgn;
    t.rhs(i) = sgn * b[i];
    basis[i] = slack0 + i;
  }
  for (std::size_t r = 0; r < k; ++r) {
    t.at(art_row[r], art0 + r) = 1.0;
    basis[art_row[r]] = art0 + r;
  }

  LPResult res;
  const std::size_t cap = 50 * (cols + m + 10) * (m + 10);

  if (k > 0) {
    // Phase 1: maximise -(sum of artificials).
    for (std::size_t j = 0; j <= cols; ++j) {
      double s = 0;
      for (std::size_t r = 0; r < k; ++r) s += t.at(art_row[r], j);
      t.obj(j) = -s;
    }
    for (std::size_t r = 0; r < k; ++r) t.obj(art0 + r) = 0.0;
    const Status s1 = detail::run(t, basis, cols, res.pivots, cap);
    if (s1 == Status::CyclingGuard) {
      res.status = s1;
      return res;
    }
    if (t.obj(cols) < -1e-9 * (1.0 + k)) {
      res.status = Status::Infeasible;
      return res;
    }
    // Drive remaining (zero-level) artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < art0) continue;
      for (std::size_t j = 0; j < art0; ++j)
        if (std::abs(t.at(i, j)) > kPivotTol) {
          t.pivot(i, j);
          basis[i] = j;
          break;
        }
    }
  }

  // Phase 2 objective row: z_j - c_j with artificial columns barred from entering.
  for (std::size_t j = 0; j <= cols; ++j) {
    double z = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) z += c[basis[i]] * t.at(i, j);
    t.obj(j) = z - (j < n ? c[j] : 0.0);
  }
  const Status s2 = detail::run(t, basis, art0, res.pivots, cap);
  res.status = s2;
  if (s2 != Status::Optimal) return res;

  res.solution.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.solution[basis[i]] = t.rhs(i);
  res.dual.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) res.dual[i] = t.obj(slack0 + i);
  res.optimum = 0;
  for (std::size_t j = 0; j < n; ++j) res.optimum += c[j] * res.solution[j];
  return res;
}

}  // namespace lovasz::lp

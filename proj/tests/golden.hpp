#pragma once

// The optimal compatible pair for the five-cycle with unit weights, entered
// by hand. Index 0 is the special row; vertices are 1..5 around the cycle.

#include <cmath>

#include "lovasz/linalg.hpp"

namespace golden {

using lovasz::linalg::Matrix;

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

inline Matrix a() {
  const double s = std::sqrt(5.0), f = kPhi - 1.0;
  Matrix m(6, 6);
  m << s, 1, 1, 1, 1, 1,
       1, 1, f, 0, 0, f,
       1, f, 1, f, 0, 0,
       1, 0, f, 1, f, 0,
       1, 0, 0, f, 1, f,
       1, f, 0, 0, f, 1;
  return m;
}

/// B' = D B D with D = diag(-1, 1, ..., 1).
inline Matrix b_prime() {
  const double s = std::sqrt(5.0), f = kPhi - 1.0;
  Matrix m(6, 6);
  m << s, -1, -1, -1, -1, -1,
      -1, 1, 0, f, f, 0,
      -1, 0, 1, 0, f, f,
      -1, f, 0, 1, 0, f,
      -1, f, f, 0, 1, 0,
      -1, 0, f, f, 0, 1;
  return m / s;
}

inline Matrix b() {
  Matrix m = b_prime();
  m.row(0) *= -1.0;
  m.col(0) *= -1.0;
  return m;
}

}  // namespace golden

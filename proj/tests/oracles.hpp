// Test-only reference computations, kept independent of the library paths
// they are compared against.

#pragma once

#include "dicke/qstate.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using dicke::Complex;
using dicke::Matrix4c;

// Concurrence from the (non-Hermitian) spectrum of rho * rho~:
// lambda_i = sqrt(eig), C = max(0, l1 - l2 - l3 - l4).
inline double wootters_concurrence(const Matrix4c& rho) {
  Matrix4c yy = Matrix4c::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix4c flipped = yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4c> solver(rho * flipped);
  std::vector<double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i).real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

// Entropy (bits) of a 2x2 Hermitian unit-trace matrix via the quadratic formula.
inline double qubit_entropy(double a, double d, Complex b) {
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  double e = 0.0;
  for (double p : {mean + radius, mean - radius}) {
    if (p > 0.0) e -= p * std::log2(p);
  }
  return e;
}

// Brute-force maximum of f on [a, b]: dense grid then ternary refinement.
struct Peak {
  double t;
  double value;
};

inline Peak brute_extremum(const std::function<double(double)>& f, double a, double b,
                           bool maximize, int grid = 200000) {
  const double sign = maximize ? 1.0 : -1.0;
  int best = 0;
  double best_v = -INFINITY;
  const double h = (b - a) / grid;
  for (int i = 0; i <= grid; ++i) {
    const double v = sign * f(a + h * i);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = a + h * std::max(0, best - 1);
  double hi = a + h * std::min(grid, best + 1);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (sign * f(m1) < sign * f(m2)) lo = m1; else hi = m2;
  }
  const double t = 0.5 * (lo + hi);
  return {t, f(t)};
}

inline double bisect_root(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm > 0) == (fa > 0)) { a = m; fa = fm; } else { b = m; }
  }
  return 0.5 * (a + b);
}

inline Matrix4c class22(double r22, double r33, double r44, Complex r23) {
  Matrix4c m = Matrix4c::Zero();
  m(1, 1) = r22;
  m(2, 2) = r33;
  m(3, 3) = r44;
  m(1, 2) = r23;
  m(2, 1) = std::conj(r23);
  return m;
}

inline Matrix4c bell(double sign) {
  return class22(0.5, 0.5, 0.0, 0.5 * sign);
}

}  // namespace oracle

// One-dimensional extremum and root search on scalar functions of time.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace dicke::search {

using ScalarFunction = std::function<double(double)>;

// Golden-section search on [a, b] for a unimodal function. Returns the
// abscissa once the bracket is narrower than tol.
double golden_section_minimize(const ScalarFunction& f, double a, double b, double tol = 1e-10);
double golden_section_maximize(const ScalarFunction& f, double a, double b, double tol = 1e-10);

// Bisection for a sign change of f on [a, b]; f(a) and f(b) must differ in sign
// (or one of them be zero). Throws std::invalid_argument otherwise.
double bisect(const ScalarFunction& f, double a, double b, double tol = 1e-10);

enum class ExtremumKind { Minimum, Maximum };

struct CriticalPoint {
  ExtremumKind kind;
  double t;
  double value;
};

struct GridOptions {
  std::size_t points = 10001;
  double refine_tol = 1e-10;
  // Relative change below which neighbouring samples count as equal.
  double flat_tol = 1e-14;
};

// Interior local extrema of f on (a, b): strict sign changes of the sampled
// slope, each refined by golden-section over the two adjacent grid cells.
// Returned in increasing t.
std::vector<CriticalPoint> interior_extrema(const ScalarFunction& f, double a, double b,
                                            const GridOptions& options = {});

struct SignChange {
  double t;
  bool downward;  // f goes from positive to nonpositive
};

// All sign changes of f on a uniform grid over [a, b], each refined by bisection.
std::vector<SignChange> sign_changes(const ScalarFunction& f, double a, double b,
                                     std::size_t points, double tol = 1e-10);

}  // namespace dicke::search

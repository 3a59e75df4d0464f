#include "dicke/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke::search {

double golden_section_minimize(const ScalarFunction& f, double a, double b, double tol) {
  if (!(b > a)) throw std::invalid_argument("golden_section: empty bracket");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double golden_section_maximize(const ScalarFunction& f, double a, double b, double tol) {
  return golden_section_minimize([&f](double t) { return -f(t); }, a, b, tol);
}

double bisect(const ScalarFunction& f, double a, double b, double tol) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw std::invalid_argument("bisect: no sign change on bracket");
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

std::vector<CriticalPoint> interior_extrema(const ScalarFunction& f, double a, double b,
                                            const GridOptions& options) {
  const std::size_t n = std::max<std::size_t>(3, options.points);
  std::vector<double> t(n), v(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    v[i] = f(t[i]);
    scale = std::max(scale, std::abs(v[i]));
  }
  const double flat = options.flat_tol * scale;

  std::vector<CriticalPoint> out;
  // Sign of the most recent non-flat slope and the grid index where it ended.
  int last_sign = 0;
  std::size_t last_index = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = v[i + 1] - v[i];
    const int sign = d > flat ? 1 : (d < -flat ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) {
      // Extremum between the start of the previous slope segment and i + 1.
      const double lo = t[last_index > 0 ? last_index - 1 : 0];
      const double hi = t[i + 1];
      CriticalPoint p{};
      if (last_sign > 0) {
        p.kind = ExtremumKind::Maximum;
        p.t = golden_section_maximize(f, lo, hi, options.refine_tol);
      } else {
        p.kind = ExtremumKind::Minimum;
        p.t = golden_section_minimize(f, lo, hi, options.refine_tol);
      }
      p.value = f(p.t);
      if (p.t > a && p.t < b) out.push_back(p);
    }
    last_sign = sign;
    last_index = i + 1;
  }
  return out;
}

std::vector<SignChange> sign_changes(const ScalarFunction& f, double a, double b,
                                     std::size_t points, double tol) {
  const std::size_t n = std::max<std::size_t>(2, points);
  std::vector<SignChange> out;
  double t_prev = a;
  double v_prev = f(a);
  for (std::size_t i = 1; i < n; ++i) {
    const double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double v = f(t);
    if ((v_prev > 0.0) != (v > 0.0)) {
      const bool down = v_prev > 0.0;
      // Predicate form keeps bisection exact at zeros.
      auto pred = [&f](double x) { return f(x) > 0.0 ? 1.0 : -1.0; };
      out.push_back({bisect(pred, t_prev, t, tol), down});
    }
    t_prev = t;
    v_prev = v;
  }
  return out;
}

}  // namespace dicke::search

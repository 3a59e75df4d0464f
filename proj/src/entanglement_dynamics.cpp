#include "dicke/entanglement_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dicke {

namespace {

constexpr double kAngleTol = 1e-12;

struct Exponentials {
  double decay;  // e^{-g0 t}
  double ech;    // e^{-g0 t} cosh(g t)
  double esh;    // e^{-g0 t} sinh(g t)
};

Exponentials exponentials(const DecayParams& p, double t) {
  const double slow = std::exp(-(p.gamma0() - p.gamma()) * t);
  const double fast = std::exp(-(p.gamma0() + p.gamma()) * t);
  return {std::exp(-p.gamma0() * t), 0.5 * (slow + fast), 0.5 * (slow - fast)};
}

double search_horizon(const DecayParams& params, double t_end) {
  return t_end > 0.0 ? t_end : kSearchHorizon / params.gamma0();
}

// Horizon that also covers every closed-form critical time.
double cross_check_horizon(const ExtremumReport& r, const DecayParams& params) {
  double h = kSearchHorizon / params.gamma0();
  if (r.t_min) h = std::max(h, 1.5 * *r.t_min);
  if (r.t_max) h = std::max(h, 1.5 * *r.t_max);
  return h;
}

// Runs the numeric search on the family's concurrence and compares it with
// the closed-form fields already stored in the report.
void attach_numeric_check(ExtremumReport& r, const PureStateAngles& angles,
                          const DecayParams& params) {
  auto f = [&](double t) { return concurrence_pure(angles, params, t); };
  r.numeric_check = search::interior_extrema(f, 0.0, cross_check_horizon(r, params));

  std::vector<search::CriticalPoint> minima, maxima;
  for (const auto& p : r.numeric_check) {
    (p.kind == search::ExtremumKind::Minimum ? minima : maxima).push_back(p);
  }
  const std::size_t want_min = r.t_min ? 1 : 0;
  const std::size_t want_max = r.t_max ? 1 : 0;
  if (minima.size() != want_min || maxima.size() != want_max) {
    r.deviation = std::numeric_limits<double>::infinity();
    r.notes.push_back("numeric search found " + std::to_string(minima.size()) + " minima and " +
                      std::to_string(maxima.size()) + " maxima");
    return;
  }
  double dev = 0.0;
  if (r.t_min) {
    dev = std::max(dev, std::abs(*r.t_min - minima[0].t) * params.gamma0());
    dev = std::max(dev, std::abs(*r.c_min - minima[0].value));
  }
  if (r.t_max) {
    dev = std::max(dev, std::abs(*r.t_max - maxima[0].t) * params.gamma0());
    dev = std::max(dev, std::abs(*r.c_max - maxima[0].value));
  }
  r.deviation = dev;
}

void fill_from_numeric(ExtremumReport& r) {
  r.monotone = r.numeric_check.empty();
  for (const auto& p : r.numeric_check) {
    if (p.kind == search::ExtremumKind::Minimum && !r.t_min) {
      r.t_min = p.t;
      r.c_min = p.value;
    } else if (p.kind == search::ExtremumKind::Maximum && !r.t_max) {
      r.t_max = p.t;
      r.c_max = p.value;
    }
  }
  if (r.numeric_check.size() > 2) {
    r.notes.push_back("more than two interior extrema");
  }
  if (r.t_min && r.t_max && *r.t_min > *r.t_max) {
    r.notes.push_back("maximum precedes minimum");
  }
}

bool near(double a, double b) { return std::abs(a - b) <= kAngleTol; }

}  // namespace

double concurrence_at(const TwoQubitState& rho0, const DecayParams& params, double t) {
  if (!is_single_excitation(classify(rho0))) {
    throw std::invalid_argument("concurrence_at requires a state with zero first row and column");
  }
  const Exponentials e = exponentials(params, t);
  const Complex r23 = rho0(basis::k10, basis::k01);
  const double sum = rho0(basis::k10, basis::k10).real() + rho0(basis::k01, basis::k01).real();
  const Complex inner{r23.real() * e.ech - 0.5 * sum * e.esh, r23.imag() * e.decay};
  return std::clamp(2.0 * std::abs(inner), 0.0, 1.0);
}

double concurrence_pure(const PureStateAngles& a, const DecayParams& params, double t) {
  const Exponentials e = exponentials(params, t);
  const double s = std::sin(2.0 * a.phi());
  const double weight = std::cos(a.psi()) * std::cos(a.psi());
  const Complex inner{s * std::cos(a.theta()) * e.ech - e.esh, -s * std::sin(a.theta()) * e.decay};
  return std::clamp(weight * std::abs(inner), 0.0, 1.0);
}

std::vector<std::pair<double, double>> concurrence_curve(const TwoQubitState& rho0,
                                                         const DecayParams& params, double t_end,
                                                         std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("concurrence_curve: n_samples must be >= 2");
  if (!(t_end > 0.0)) throw std::invalid_argument("concurrence_curve: t_end must be positive");
  std::vector<std::pair<double, double>> out;
  out.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = t_end * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    out.emplace_back(t, concurrence_at(rho0, params, t));
  }
  return out;
}

std::string to_string(ExtremumCase c) {
  switch (c) {
    case ExtremumCase::SingleExcitation: return "SingleExcitation";
    case ExtremumCase::ThetaZero: return "ThetaZero";
    case ExtremumCase::ThetaPi: return "ThetaPi";
    case ExtremumCase::ThetaHalfPi: return "ThetaHalfPi";
    case ExtremumCase::Generic: return "Generic";
  }
  return "Generic";
}

ExtremumReport extrema_single_excitation(double psi, const DecayParams& params) {
  const PureStateAngles angles(0.0, psi, 0.0, 0.0);
  ExtremumReport r;
  r.case_tag = ExtremumCase::SingleExcitation;
  r.c_initial = 0.0;
  const double weight = std::cos(psi) * std::cos(psi);
  if (params.g() == 0.0 || weight < 1e-15) {
    r.monotone = true;
    r.c_max = 0.0;
    r.notes.push_back(params.g() == 0.0 ? "g = 0: no entanglement is generated"
                                        : "ground state: concurrence stays zero");
    attach_numeric_check(r, angles, params);
    return r;
  }
  const double g0 = params.gamma0();
  const double g1 = params.gamma();
  const double ratio = (g0 + g1) / (g0 - g1);
  r.t_max = std::log(ratio) / (2.0 * g1);
  r.c_max = weight * (g1 / (g0 - g1)) * std::pow(ratio, -(g0 + g1) / (2.0 * g1));
  r.monotone = false;
  r.exceeds_initial = *r.c_max > r.c_initial;
  attach_numeric_check(r, angles, params);
  return r;
}

ExtremumReport extrema_theta_zero(double phi, const DecayParams& params) {
  const PureStateAngles angles(phi, 0.0, 0.0, 0.0);
  const double s = std::sin(2.0 * phi);
  ExtremumReport r;
  r.case_tag = ExtremumCase::ThetaZero;
  r.c_initial = std::clamp(s, 0.0, 1.0);
  const double g0 = params.gamma0();
  const double g1 = params.gamma();

  if (params.g() == 0.0) {
    r.monotone = true;
    r.exceeds_initial = false;
    r.notes.push_back("g = 0: pure exponential decay");
  } else if (s >= 1.0 - 1e-15) {
    r.monotone = true;
    r.exceeds_initial = false;
    r.notes.push_back("maximally entangled start: decay at rate gamma0 + gamma, no revival");
  } else {
    const double arg = (1.0 + s) * (g0 + g1) / ((1.0 - s) * (g0 - g1));
    if (s > 1e-15) {
      r.t_min = std::log((1.0 + s) / (1.0 - s)) / (2.0 * g1);
      r.c_min = 0.0;
    }
    r.t_max = std::log(arg) / (2.0 * g1);
    r.c_max = g1 * std::abs(std::cos(2.0 * phi)) / std::sqrt(g0 * g0 - g1 * g1) *
              std::pow(arg, -g0 / (2.0 * g1));
    r.monotone = false;
    r.exceeds_initial = *r.c_max > r.c_initial;
  }
  attach_numeric_check(r, angles, params);
  return r;
}

ExtremumReport extrema_theta_pi(double phi, const DecayParams& params) {
  const PureStateAngles angles(phi, 0.0, std::numbers::pi, 0.0);
  const double s = std::sin(2.0 * phi);
  ExtremumReport r;
  r.case_tag = ExtremumCase::ThetaPi;
  r.c_initial = std::clamp(s, 0.0, 1.0);
  const double g0 = params.gamma0();
  const double g1 = params.gamma();
  if (s >= params.g()) {
    r.monotone = true;
    r.exceeds_initial = false;
  } else {
    const double arg = (1.0 - s) * (g0 + g1) / ((1.0 + s) * (g0 - g1));
    r.t_max = std::log(arg) / (2.0 * g1);
    r.c_max = g1 * std::abs(std::cos(2.0 * phi)) / std::sqrt(g0 * g0 - g1 * g1) *
              std::pow(arg, -g0 / (2.0 * g1));
    r.monotone = false;
    r.exceeds_initial = *r.c_max > r.c_initial;
  }
  attach_numeric_check(r, angles, params);
  return r;
}

ExtremumReport extrema_theta_half_pi(double phi, const DecayParams& params) {
  const PureStateAngles angles(phi, 0.0, std::numbers::pi / 2.0, 0.0);
  const double s4 = std::sin(4.0 * phi);
  const double c4 = std::cos(4.0 * phi);
  ExtremumReport r;
  r.case_tag = ExtremumCase::ThetaHalfPi;
  r.c_initial = std::clamp(std::sin(2.0 * phi), 0.0, 1.0);
  const double g0 = params.gamma0();
  const double g1 = params.gamma();

  if (!(std::abs(s4) < params.g())) {
    r.monotone = true;
    attach_numeric_check(r, angles, params);
    return r;
  }
  const double root = std::sqrt(g1 * g1 - g0 * g0 * s4 * s4);
  const double w_min = (g0 * c4 - root) / (g0 - g1);
  const double w_max = (g0 * c4 + root) / (g0 - g1);
  const double v_min = (g1 * g1 * c4 - g1 * root) / (2.0 * (g0 * g0 - g1 * g1));
  const double v_max = (g1 * g1 * c4 + g1 * root) / (2.0 * (g0 * g0 - g1 * g1));

  if (c4 <= 0.0 || !(w_max > 1.0) || !(v_max > 0.0)) {
    // The logarithm arguments are not admissible: let the grid decide.
    r.numeric_fallback = true;
    r.notes.push_back("closed-form arguments not admissible (cos 4phi <= 0); numeric search used");
    r.numeric_check =
        search::interior_extrema([&](double t) { return concurrence_pure(angles, params, t); },
                                 0.0, kSearchHorizon / g0);
    fill_from_numeric(r);
    return r;
  }
  if (w_min > 1.0 + 1e-12 && v_min > 0.0) {
    r.t_min = std::log(w_min) / (2.0 * g1);
    r.c_min = std::pow(w_min, -g0 / (2.0 * g1)) * std::sqrt(v_min);
  } else {
    r.notes.push_back("minimum sits at t = 0");
  }
  r.t_max = std::log(w_max) / (2.0 * g1);
  r.c_max = std::pow(w_max, -g0 / (2.0 * g1)) * std::sqrt(v_max);
  r.monotone = false;
  r.exceeds_initial = *r.c_max > r.c_initial;
  attach_numeric_check(r, angles, params);
  return r;
}

ExtremumReport extrema_numeric(const TwoQubitState& rho0, const DecayParams& params,
                               double t_end) {
  if (!is_single_excitation(classify(rho0))) {
    throw std::invalid_argument("extrema_numeric requires a state with zero first row and column");
  }
  ExtremumReport r;
  r.case_tag = ExtremumCase::Generic;
  r.c_initial = concurrence_at(rho0, params, 0.0);
  r.numeric_check = search::interior_extrema(
      [&](double t) { return concurrence_at(rho0, params, t); }, 0.0,
      search_horizon(params, t_end));
  fill_from_numeric(r);
  if (r.c_max) r.exceeds_initial = *r.c_max > r.c_initial;
  return r;
}

ExtremumReport extrema_for_pure(const PureStateAngles& a, const DecayParams& params) {
  const double half_pi = std::numbers::pi / 2.0;
  if (near(a.phi(), 0.0) || near(a.phi(), half_pi)) {
    return extrema_single_excitation(a.psi(), params);
  }
  if (near(a.psi(), 0.0)) {
    if (near(a.theta(), 0.0)) return extrema_theta_zero(a.phi(), params);
    if (near(a.theta(), std::numbers::pi)) return extrema_theta_pi(a.phi(), params);
    if (near(a.theta(), half_pi) || near(a.theta(), 3.0 * half_pi)) {
      return extrema_theta_half_pi(a.phi(), params);
    }
  }
  return extrema_numeric(make_pure(a), params);
}

}  // namespace dicke

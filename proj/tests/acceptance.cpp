// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "cli.hpp"
#include "dicke/chsh.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/entanglement_dynamics.hpp"
#include "dicke/nonlocality.hpp"
#include "dicke/random_states.hpp"
#include "dicke/search.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace dicke;
using std::numbers::pi;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_diff(const Matrix4c& a, const Matrix4c& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Worst trace / Hermiticity / PSD / class violation over every sample seen.
struct Hygiene {
  double trace = 0.0;
  double herm = 0.0;
  double min_eig = 0.0;
  std::size_t samples = 0;
  std::size_t class_breaks = 0;

  void add(const TwoQubitState& s, StateClass initial) {
    const StateDiagnostics d = diagnose(s.matrix());
    trace = std::max(trace, d.trace_error);
    herm = std::max(herm, d.hermiticity_error);
    min_eig = std::min(min_eig, d.min_eigenvalue);
    ++samples;
    const StateClass c = classify(s, 1e-9);
    if (initial == StateClass::Class22 && c != StateClass::Class22) ++class_breaks;
    if (initial == StateClass::Class12 && c == StateClass::General) ++class_breaks;
  }
  void add(const Trajectory& t, StateClass initial) {
    for (const auto& s : t.states()) add(s, initial);
  }
};

Hygiene hygiene;

TwoQubitState bell(double sign) {
  Vector4c v = Vector4c::Zero();
  v(basis::k10) = 1.0 / std::numbers::sqrt2;
  v(basis::k01) = sign / std::numbers::sqrt2;
  return TwoQubitState::from_pure(v);
}

// cos(phi)|10> - sin(phi)|01> with sin 2phi = c.
PureStateAngles theta_pi(double c) { return {0.5 * std::asin(c), 0.0, pi, 0.0}; }

std::vector<search::CriticalPoint> numeric_extrema(const TwoQubitState& rho0, const DecayParams& p) {
  return search::interior_extrema([&](double t) { return concurrence_at(rho0, p, t); }, 0.0,
                                  kSearchHorizon / p.gamma0());
}

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(20240601);
  NumericOptions opt;
  opt.record_every = 1;
  opt.compute_scalars = false;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const TwoQubitState rho0 = random_class12(rng);
    const StateClass cls = classify(rho0);
    for (double g : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      const DecayParams p(1.0, g);
      const Trajectory traj = evolve_numeric(rho0, p, 10.0, 10000, opt);
      for (std::size_t k = 0; k < traj.size(); ++k) {
        const TwoQubitState exact = evolve_analytic(rho0, p, traj.times()[k]);
        worst = std::max(worst, max_diff(exact.matrix(), traj.states()[k].matrix()));
        if (k % 100 == 0) hygiene.add(exact, cls);
      }
      hygiene.add(traj, cls);
    }
  }
  const double secs = seconds_since(t0);
  report(1, "analytic vs RK4 (100 states x 5 g, t<=10, step 1e-3)", worst <= 1e-6 && secs < 30.0,
         fmt("max dev %.3e (<= 1e-6), %.1f s (< 30 s)", worst, secs));
}

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(2);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const TwoQubitState rho = random_class12(rng);
    worst = std::max(worst, std::abs(concurrence(rho) - concurrence_single_excitation(rho)));
  }
  const double secs = seconds_since(t0);
  report(2, "2|rho_23| shortcut vs full concurrence (1e4 states)", worst <= 1e-10 && secs < 10.0,
         fmt("max dev %.3e (<= 1e-10), %.2f s (< 10 s)", worst, secs));
}

void criterion_3() {
  bool pass = true;
  double worst = 0.0;
  double prev = 0.0;
  const TwoQubitState excited = TwoQubitState::basis_projector(basis::k10);
  for (double g : {0.5, 0.7, 0.9}) {
    const DecayParams p(1.0, g);
    const ExtremumReport r = extrema_single_excitation(0.0, p);
    const auto pts = numeric_extrema(excited, p);
    if (pts.size() != 1 || pts[0].kind != search::ExtremumKind::Maximum || !r.t_max) {
      pass = false;
      continue;
    }
    worst = std::max({worst, std::abs(pts[0].t - *r.t_max), std::abs(pts[0].value - *r.c_max)});
    if (!(*r.c_max > prev)) pass = false;
    prev = *r.c_max;
  }
  // e^{-t} sinh(t/2) maximized directly.
  const double t_spot = search::golden_section_maximize(
      [](double t) { return std::exp(-t) * std::sinh(0.5 * t); }, 0.0, 10.0, 1e-12);
  const ExtremumReport spot = extrema_single_excitation(0.0, DecayParams(1.0, 0.5));
  const double spot_dev = std::max({std::abs(*spot.t_max - std::log(3.0)),
                                    std::abs(*spot.c_max - std::pow(3.0, -1.5)),
                                    std::abs(t_spot - std::log(3.0))});
  pass = pass && worst <= 1e-6 && spot_dev <= 1e-6;
  report(3, "single-excitation peak (psi=0, g=0.5/0.7/0.9)", pass,
         fmt("max numeric dev %.3e (<= 1e-6), C_max increasing in g, g=0.5 spot dev %.3e", worst,
             spot_dev));
}

void criterion_4() {
  bool pass = true;
  double worst = 0.0;
  double min_margin = INFINITY;
  const DecayParams p(1.0, 0.75);
  for (double s : {0.1, 0.3, 0.5}) {
    const ExtremumReport r = extrema_theta_pi(0.5 * std::asin(s), p);
    const auto pts = numeric_extrema(make_pure(theta_pi(s)), p);
    if (!r.c_max || pts.size() != 1 || pts[0].kind != search::ExtremumKind::Maximum) {
      pass = false;
      continue;
    }
    worst = std::max({worst, std::abs(pts[0].t - *r.t_max), std::abs(pts[0].value - *r.c_max)});
    min_margin = std::min(min_margin, *r.c_max - s);
  }
  const TwoQubitState mono_state = make_pure(theta_pi(0.8));
  const ExtremumReport mono = extrema_theta_pi(0.5 * std::asin(0.8), p);
  const bool no_extrema = numeric_extrema(mono_state, p).empty();
  bool decreasing = true;
  for (int i = 1; i <= 10000; ++i) {
    if (concurrence_at(mono_state, p, 15.0 * i / 10000.0) >
        concurrence_at(mono_state, p, 15.0 * (i - 1) / 10000.0)) {
      decreasing = false;
    }
  }
  pass = pass && worst <= 1e-6 && min_margin > 0.0 && mono.monotone && no_extrema && decreasing;
  report(4, "Theta=pi revival (sin2phi=0.1/0.3/0.5) and monotone 0.8 at g=0.75", pass,
         fmt("max numeric dev %.3e (<= 1e-6), min C_max - C(0) = %.4f (> 0)", worst,
             min_margin) +
             ", sin2phi=0.8 monotone: " + (no_extrema && decreasing && mono.monotone ? "yes" : "no"));
}

void criterion_5() {
  const double near_one = *extrema_theta_pi(0.5 * std::asin(0.3), DecayParams(1.0, 0.999)).c_max;
  const double dev_a = std::abs(near_one - 0.65);
  const double edge = *extrema_theta_pi(0.5 * std::asin(0.75 - 1e-4), DecayParams(1.0, 0.75)).c_max;
  const double dev_b = std::abs(edge - 0.75);
  report(5, "g -> 1 and sin2phi -> g limits of the Theta=pi maximum", dev_a <= 2e-3 && dev_b <= 5e-3,
         fmt("g=0.999: C_max=%.10f, |C_max-0.65|=%.3e (<= 2e-3); sin2phi=g-1e-4: |C_max-g|=%.3e (<= 5e-3)",
             near_one, dev_a, dev_b));
}

void criterion_6() {
  const DecayParams p(1.0, 0.75);
  const double phi = pi / 20;
  const ExtremumReport r = extrema_theta_half_pi(phi, p);
  const auto pts = numeric_extrema(make_pure({phi, 0.0, pi / 2, 0.0}), p);
  bool pass = pts.size() == 2 && pts[0].kind == search::ExtremumKind::Minimum &&
              pts[1].kind == search::ExtremumKind::Maximum && r.t_min && r.t_max;
  double worst = INFINITY;
  if (pass) {
    worst = std::max({std::abs(pts[0].t - *r.t_min), std::abs(pts[0].value - *r.c_min),
                      std::abs(pts[1].t - *r.t_max), std::abs(pts[1].value - *r.c_max)});
  }
  std::size_t spurious = 0;
  for (double s4 : {0.75, 0.8, 0.9, 1.0}) {
    const double q = 0.25 * std::asin(s4);
    const ExtremumReport m = extrema_theta_half_pi(q, p);
    spurious += numeric_extrema(make_pure({q, 0.0, pi / 2, 0.0}), p).size();
    if (!m.monotone) ++spurious;
  }
  pass = pass && worst <= 1e-6 && spurious == 0;
  report(6, "Theta=pi/2 min-then-max profile (phi=pi/20, g=0.75)", pass,
         fmt("extrema found %.0f (min, max), max dev %.3e (<= 1e-6); |sin4phi|>=g extrema: %.0f",
             static_cast<double>(pts.size()), worst, static_cast<double>(spurious)));
}

void criterion_7() {
  Rng rng(7);
  double worst = 0.0;
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const TwoQubitState rho = random_class22(rng);
    const double m = m_value(rho);
    worst = std::max(worst, std::abs(m_class22(rho) - m));
    if (chsh_criterion_class22(rho).violates != (m - 1.0 > kViolationTolerance)) ++mismatches;
  }
  const TwoQubitState ground = TwoQubitState::basis_projector(basis::k00);
  const double spot = std::max({std::abs(m_value(bell(1.0)) - 2.0), std::abs(n_value(bell(1.0)) - 1.0),
                                std::abs(m_value(ground) - 1.0)});
  report(7, "CHSH shortcut and iff-criterion (1e4 states)", worst <= 1e-10 && mismatches == 0 && spot <= 1e-12,
         fmt("max |m_class22 - m| %.3e (<= 1e-10), criterion mismatches %.0f, Bell/ground spot dev %.1e",
             worst, static_cast<double>(mismatches), spot));
}

void criterion_8() {
  double worst = 0.0;
  bool ordered = true;
  bool verified = true;
  for (double g : {0.25, 0.5, 0.75}) {
    const DecayParams p(1.0, g);
    for (double sign : {1.0, -1.0}) {
      const double rate = 1.0 + sign * g;
      const NonlocalityTimes t = nonlocality_times(bell(sign), p);
      worst = std::max({worst, std::abs(t.t1 - std::log(1.25) / rate),
                        std::abs(t.t2 - 0.5 * std::log(2.0) / rate)});
      ordered = ordered && t.t_n == t.t2;
      verified = verified && t.locality_verified;
      for (int i = 0; i <= 100; ++i) {
        hygiene.add(evolve_analytic(bell(sign), p, t.verification_horizon * i / 100.0),
                    StateClass::Class22);
      }
    }
  }
  const NonlocalityTimes slow = nonlocality_times(bell(-1.0), DecayParams(1.0, 0.99));
  verified = verified && slow.locality_verified;
  report(8, "Bell-pair nonlocality times", worst <= 1e-9 && ordered && verified && slow.t_n > 30.0,
         fmt("max dev %.3e (<= 1e-9), g=0.99 t_n = %.3f (> 30)", worst, slow.t_n) +
             ", t_n = t2: " + (ordered ? "yes" : "no") +
             ", locality after t_n verified: " + (verified ? "yes" : "no"));
}

bool non_increasing(const std::vector<std::pair<double, double>>& curve) {
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].second > curve[i - 1].second + 1e-9) return false;
  }
  return true;
}

void criterion_9() {
  const DecayParams p(1.0, 0.7);
  const TwoQubitState rho0 = make_pure(theta_pi(0.3));
  const auto curve = nonlocality_curve(rho0, p, 15.0, 1000);
  const auto pts = numeric_extrema(rho0, p);
  const bool peak = pts.size() == 1 && pts[0].kind == search::ExtremumKind::Maximum && pts[0].value > 0.3;
  bool pass = non_increasing(curve) && peak;
  bool family = true;
  for (double c : {0.8, 0.9, 1.0}) {
    const TwoQubitState s = make_pure(theta_pi(c));
    const auto fc = nonlocality_curve(s, p, 15.0, 1000);
    family = family && non_increasing(fc) && fc.front().second > 0.0 && fc.back().second == 0.0;
    for (std::size_t i = 0; i < fc.size(); i += 10) hygiene.add(evolve_analytic(s, p, fc[i].first), StateClass::Class22);
  }
  for (std::size_t i = 0; i < curve.size(); i += 10) hygiene.add(evolve_analytic(rho0, p, curve[i].first), StateClass::Class22);
  pass = pass && family;
  report(9, "nonlocality decays while concurrence peaks (g=0.7)", pass,
         std::string("C(0)=0.3: n non-increasing ") + (non_increasing(curve) ? "yes" : "no") +
             fmt(", interior C_max = %.4f (> 0.3)", peak ? pts[0].value : 0.0) +
             "; C(0)=0.8/0.9/1.0 non-increasing to n=0: " + (family ? "yes" : "no"));
}

void criterion_10() {
  const bool pass = hygiene.trace <= 1e-9 && hygiene.herm <= 1e-12 && hygiene.min_eig >= -1e-8 &&
                    hygiene.class_breaks == 0;
  report(10, "trajectory hygiene over all runs above", pass,
         fmt("%.0f samples: trace err %.2e (<= 1e-9), herm %.2e (<= 1e-12), min eig %.2e (>= -1e-8)",
             static_cast<double>(hygiene.samples), hygiene.trace, hygiene.herm, hygiene.min_eig) +
             ", class breaks " + std::to_string(hygiene.class_breaks));
}

void criterion_11() {
  const std::vector<std::string> args{"evolve", "--phi", "0.4", "--psi", "0.3", "--theta", "2.0",
                                      "--g", "0.6", "--samples", "501", "--seed", "7"};
  std::ostringstream a, b, err;
  const int ca = cli::run(args, a, err);
  const int cb = cli::run(args, b, err);
  const bool identical = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  std::ostringstream vout;
  const auto t0 = std::chrono::steady_clock::now();
  const int cv = cli::run({"validate"}, vout, err);
  const double secs = seconds_since(t0);
  report(11, "CLI determinism and default validation", identical && cv == 0,
         std::string("evolve twice byte-identical: ") + (identical ? "yes" : "no") +
             ", validate exit " + std::to_string(cv) + fmt(" (%.1f s)", secs));
}

}  // namespace

int main() {
  const std::function<void()> criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                                            criterion_5, criterion_6, criterion_7, criterion_8,
                                            criterion_9, criterion_10, criterion_11};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

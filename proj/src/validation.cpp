#include "dicke/validation.hpp"

#include "dicke/chsh.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/entanglement_dynamics.hpp"
#include "dicke/nonlocality.hpp"
#include "dicke/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace dicke {

namespace {

constexpr double kGValues[] = {0.0, 0.25, 0.5, 0.75, 0.9};

SuiteResult run_suite(const std::string& name, double threshold,
                      const std::function<double()>& body) {
  SuiteResult r;
  r.name = name;
  r.threshold = threshold;
  try {
    r.metric = body();
    r.passed = r.metric <= threshold;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) { return (a - b).cwiseAbs().maxCoeff(); }

TwoQubitState bell_state(double sign) {
  Vector4c v = Vector4c::Zero();
  v(basis::k10) = 1.0 / std::numbers::sqrt2;
  v(basis::k01) = sign / std::numbers::sqrt2;
  return TwoQubitState::from_pure(v);
}

// Worst violation of the trajectory tolerances, normalized so that <= 1 passes.
double hygiene_metric(const Trajectory& traj, StateClass initial_class) {
  const Tolerances tol = Tolerances::trajectory();
  double worst = 0.0;
  for (const auto& s : traj.states()) {
    const StateDiagnostics d = diagnose(s.matrix());
    worst = std::max(worst, d.trace_error / tol.trace);
    worst = std::max(worst, d.hermiticity_error / tol.hermiticity);
    worst = std::max(worst, -d.min_eigenvalue / tol.psd);
    if (initial_class != StateClass::General) {
      const StateClass c = classify(s, 1e-9);
      const bool kept = initial_class == StateClass::Class22 ? c == StateClass::Class22
                                                             : c != StateClass::General;
      if (!kept) worst = std::max(worst, 2.0);
    }
  }
  return worst;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed; });
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : suites) {
    arr.push_back({{"name", s.name},
                   {"pass", s.passed},
                   {"metric", s.metric},
                   {"threshold", s.threshold},
                   {"detail", s.detail}});
  }
  return {{"seed", seed}, {"pass", passed()}, {"suites", arr}};
}

ValidationReport run_validation(const ValidationOptions& opt) {
  ValidationReport report;
  report.seed = opt.seed;
  Rng rng(opt.seed);

  if (opt.input_state) {
    report.suites.push_back(run_suite("input_state", 1.0, [&] {
      const TwoQubitState rho = TwoQubitState::from_matrix(*opt.input_state);
      const Trajectory traj = evolve(rho, DecayParams(1.0, 0.5), 10.0, 201);
      return hygiene_metric(traj, classify(rho));
    }));
  }

  report.suites.push_back(run_suite("concurrence_shortcut", 1e-10, [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < opt.shortcut_states; ++i) {
      const TwoQubitState rho = random_class12(rng);
      worst = std::max(worst, std::abs(concurrence(rho) - concurrence_single_excitation(rho)));
    }
    return worst;
  }));

  report.suites.push_back(run_suite("pure_state_concurrence", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double phi = std::numbers::pi / 2.0 * i / 19.0;
        const double psi = std::numbers::pi / 2.0 * j / 19.0;
        const double expect = std::cos(psi) * std::cos(psi) * std::sin(2.0 * phi);
        worst = std::max(worst, std::abs(concurrence(make_pure({phi, psi, 0.0, 0.0})) - expect));
      }
    }
    return worst;
  }));

  report.suites.push_back(run_suite("analytic_vs_rk4", 1e-6, [&] {
    double worst = 0.0;
    NumericOptions numeric;
    numeric.record_every = 10;
    numeric.compute_scalars = false;
    for (std::size_t i = 0; i < opt.oracle_states; ++i) {
      const TwoQubitState rho0 = random_class12(rng);
      for (double g : kGValues) {
        const DecayParams p(1.0, g);
        const Trajectory traj = evolve_numeric(rho0, p, 10.0, 10000, numeric);
        for (std::size_t k = 0; k < traj.size(); ++k) {
          const TwoQubitState exact = evolve_analytic(rho0, p, traj.times()[k]);
          worst = std::max(worst, max_abs_diff(exact.matrix(), traj.states()[k].matrix()));
        }
      }
    }
    return worst;
  }));

  report.suites.push_back(run_suite("semigroup", 1e-10, [&] {
    std::uniform_real_distribution<double> when(0.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const TwoQubitState rho0 = random_class12(rng);
      const DecayParams p(1.0, kGValues[i % 5]);
      const double t1 = when(rng);
      const double t2 = when(rng);
      const auto twice = evolve_analytic(evolve_analytic(rho0, p, t1), p, t2);
      const auto once = evolve_analytic(rho0, p, t1 + t2);
      worst = std::max(worst, max_abs_diff(twice.matrix(), once.matrix()));
    }
    return worst;
  }));

  report.suites.push_back(run_suite("chsh_class22", 1e-10, [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < opt.class22_states; ++i) {
      const TwoQubitState rho = random_class22(rng);
      worst = std::max(worst, std::abs(m_class22(rho) - m_value(rho)));
      const Class22Violation v = chsh_criterion_class22(rho);
      if (v.violates != (m_value(rho) - 1.0 > kViolationTolerance)) worst = 1.0;
    }
    return worst;
  }));

  report.suites.push_back(run_suite("extrema_closed_forms", kCrossCheckTolerance, [&] {
    std::vector<ExtremumReport> reports;
    for (double g : {0.5, 0.7, 0.9}) reports.push_back(extrema_single_excitation(0.0, DecayParams(1.0, g)));
    const DecayParams p(1.0, 0.75);
    for (double phi : {std::numbers::pi / 40.0, std::numbers::pi / 20.0}) {
      reports.push_back(extrema_theta_zero(phi, p));
      reports.push_back(extrema_theta_half_pi(phi, p));
    }
    for (double s : {0.1, 0.3, 0.5, 0.8}) reports.push_back(extrema_theta_pi(0.5 * std::asin(s), p));
    double worst = 0.0;
    for (const auto& r : reports) worst = std::max(worst, r.deviation.value_or(0.0));
    return worst;
  }));

  report.suites.push_back(run_suite("bell_pair_nonlocality_times", 1e-9, [&] {
    double worst = 0.0;
    for (double g : {0.25, 0.5, 0.75}) {
      const DecayParams p(1.0, g);
      for (double sign : {1.0, -1.0}) {
        const double rate = p.gamma0() + sign * p.gamma();
        const NonlocalityTimes t = nonlocality_times(bell_state(sign), p);
        worst = std::max(worst, std::abs(t.t1 - std::log(1.25) / rate));
        worst = std::max(worst, std::abs(t.t2 - std::log(2.0) / (2.0 * rate)));
        if (!t.locality_verified) worst = 1.0;
      }
    }
    return worst;
  }));

  report.suites.push_back(run_suite("trajectory_hygiene", 1.0, [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const DecayParams p(1.0, kGValues[i % 5]);
      const TwoQubitState c12 = random_class12(rng);
      const TwoQubitState c22 = random_class22(rng);
      worst = std::max(worst, hygiene_metric(analytic_trajectory(c12, p, 10.0, 201, false),
                                             classify(c12)));
      worst = std::max(worst, hygiene_metric(analytic_trajectory(c22, p, 10.0, 201, false),
                                             classify(c22)));
    }
    const TwoQubitState general = random_state(rng);
    worst = std::max(worst, hygiene_metric(evolve(general, DecayParams(1.0, 0.5), 10.0, 101),
                                           StateClass::General));
    return worst;
  }));

  return report;
}

}  // namespace dicke

#include "dicke/nonlocality.hpp"

#include "dicke/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dicke {

namespace {

constexpr std::size_t kRootGrid = 20001;
constexpr std::size_t kVerifyGrid = 1000;
constexpr double kRootTol = 1e-10;
constexpr double kLocalTol = 1e-9;

void require_class22(const TwoQubitState& rho, const char* what) {
  if (classify(rho) != StateClass::Class22) {
    throw std::invalid_argument(std::string(what) +
                                " requires a state with only rho_22, rho_33, rho_23, rho_44 nonzero");
  }
}

struct Crossing {
  double t = 0.0;
  bool multiple = false;
  bool ends_positive = false;
};

// Last downward zero crossing of f on [0, horizon]; 0 if f is never positive.
Crossing last_downward_crossing(const search::ScalarFunction& f, double horizon) {
  const auto changes = search::sign_changes(f, 0.0, horizon, kRootGrid, kRootTol);
  Crossing c;
  c.multiple = changes.size() > 1;
  c.ends_positive = f(horizon) > 0.0;
  for (const auto& ch : changes) {
    if (ch.downward) c.t = ch.t;
  }
  return c;
}

}  // namespace

NonlocalityTimes nonlocality_times(const TwoQubitState& rho0, const DecayParams& params) {
  require_class22(rho0, "nonlocality_times");
  NonlocalityTimes out;
  if (n_value(rho0) <= kViolationTolerance) {
    out.initially_local = true;
    out.notes.push_back("initial state satisfies every CHSH inequality");
    return out;
  }

  // The slowest rate in the single-excitation block is gamma0 - gamma.
  const double horizon =
      std::max(15.0 / params.gamma0(), 40.0 / (params.gamma0() - params.gamma()));

  auto purity_condition = [&](double t) {
    const TwoQubitState s = evolve_analytic(rho0, params, t);
    const double r22 = s(basis::k10, basis::k10).real();
    const double r33 = s(basis::k01, basis::k01).real();
    const double r44 = s(basis::k00, basis::k00).real();
    // rho_22 rho_33 - S_L/2, expanded for this class to avoid cancellation in 1 - tr rho^2.
    return std::norm(s(basis::k10, basis::k01)) - r44 * (r22 + r33);
  };
  auto coherence_condition = [&](double t) {
    const TwoQubitState s = evolve_analytic(rho0, params, t);
    return std::abs(s(basis::k10, basis::k01)) - 1.0 / (2.0 * std::numbers::sqrt2);
  };

  const Crossing c1 = last_downward_crossing(purity_condition, horizon);
  const Crossing c2 = last_downward_crossing(coherence_condition, horizon);
  out.t1 = c1.t;
  out.t2 = c2.t;
  out.t_n = std::max(out.t1, out.t2);
  out.t1_dominates = out.t1 > out.t2;
  out.multiple_crossings = c1.multiple || c2.multiple;
  if (c1.multiple) out.notes.push_back("rho_22 rho_33 - S_L/2 changes sign more than once");
  if (c2.multiple) out.notes.push_back("|rho_23| - 1/(2 sqrt 2) changes sign more than once");
  if (c1.ends_positive || c2.ends_positive) {
    out.notes.push_back("a violation condition still holds at the search horizon");
  }

  out.verification_horizon = std::max(15.0 / params.gamma0(), 2.0 * out.t_n);
  out.locality_verified = true;
  for (std::size_t i = 0; i < kVerifyGrid; ++i) {
    const double t = out.t_n + (out.verification_horizon - out.t_n) * static_cast<double>(i) /
                                   static_cast<double>(kVerifyGrid - 1);
    if (n_value(evolve_analytic(rho0, params, t)) > kLocalTol) {
      out.locality_verified = false;
      out.notes.push_back("n(rho(t)) > 0 at t = " + std::to_string(t));
      break;
    }
  }
  return out;
}

std::vector<std::pair<double, double>> nonlocality_curve(const TwoQubitState& rho0,
                                                         const DecayParams& params, double t_end,
                                                         std::size_t n_samples) {
  require_class22(rho0, "nonlocality_curve");
  if (n_samples < 2) throw std::invalid_argument("nonlocality_curve: n_samples must be >= 2");
  if (!(t_end > 0.0)) throw std::invalid_argument("nonlocality_curve: t_end must be positive");
  std::vector<std::pair<double, double>> out;
  out.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = t_end * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    out.emplace_back(t, n_value(evolve_analytic(rho0, params, t)));
  }
  return out;
}

}  // namespace dicke

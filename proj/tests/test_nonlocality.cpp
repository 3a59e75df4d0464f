#include "dicke/nonlocality.hpp"
#include "dicke/chsh.hpp"
#include "dicke/entanglement_dynamics.hpp"
#include "dicke/random_states.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dicke;
using std::numbers::pi;

namespace {

TwoQubitState st(const Matrix4c& m) { return TwoQubitState::from_matrix(m); }

// cos(phi)|10> - sin(phi)|01> with concurrence c.
TwoQubitState theta_pi_state(double c) { return make_pure({0.5 * std::asin(c), 0.0, pi, 0.0}); }

bool non_increasing(const std::vector<std::pair<double, double>>& curve, double tol) {
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].second > curve[i - 1].second + tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Bell pair times") {
  for (double g : {0.0, 0.25, 0.5, 0.75}) {
    const DecayParams p(1.0, g);
    for (double sign : {1.0, -1.0}) {
      const double rate = 1.0 + sign * g;
      const NonlocalityTimes t = nonlocality_times(st(oracle::bell(sign)), p);
      CHECK(std::abs(t.t1 - std::log(1.25) / rate) <= 1e-9);
      CHECK(std::abs(t.t2 - 0.5 * std::log(2.0) / rate) <= 1e-9);
      CHECK(t.t_n == t.t2);
      CHECK_FALSE(t.t1_dominates);
      CHECK_FALSE(t.multiple_crossings);
      CHECK(t.locality_verified);
    }
  }
  const NonlocalityTimes minus = nonlocality_times(st(oracle::bell(-1.0)), DecayParams(1.0, 0.75));
  CHECK(minus.t2 == doctest::Approx(1.3862943611443037).epsilon(1e-10));
  CHECK(minus.t1 == doctest::Approx(0.892574205249548).epsilon(1e-10));
  const NonlocalityTimes plus = nonlocality_times(st(oracle::bell(1.0)), DecayParams(1.0, 0.75));
  CHECK(plus.t_n == doctest::Approx(0.19804205158855578).epsilon(1e-10));
}

TEST_CASE("t_n diverges for the subradiant pair as g -> 1") {
  double prev = 0.0;
  for (double g : {0.5, 0.9, 0.99}) {
    const NonlocalityTimes t = nonlocality_times(st(oracle::bell(-1.0)), DecayParams(1.0, g));
    CHECK(t.t_n > prev);
    CHECK(t.t_n * (1.0 - g) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-8));
    prev = t.t_n;
  }
  CHECK(prev > 30.0);
}

TEST_CASE("local and malformed inputs") {
  const NonlocalityTimes ground =
      nonlocality_times(TwoQubitState::basis_projector(basis::k00), DecayParams(1.0, 0.5));
  CHECK(ground.initially_local);
  CHECK(ground.t1 == 0.0);
  CHECK(ground.t2 == 0.0);
  CHECK(ground.t_n == 0.0);

  CHECK(nonlocality_times(st(oracle::class22(0.45, 0.45, 0.1, 0.3)), DecayParams(1.0, 0.5))
            .initially_local);

  Matrix4c m = oracle::class22(0.45, 0.45, 0.1, 0.3);
  m(1, 3) = m(3, 1) = 0.05;
  CHECK_THROWS_AS(nonlocality_times(st(m), DecayParams(1.0, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(nonlocality_curve(st(m), DecayParams(1.0, 0.5), 1.0, 10), std::invalid_argument);
}

TEST_CASE("purity-driven violation sets t1 beyond t2") {
  // Coherence below 1/(2 sqrt 2): only the rho_22 rho_33 condition holds.
  const auto rho0 = st(oracle::class22(0.5, 0.5, 0.0, 0.34));
  REQUIRE(n_value(rho0) > 0.0);
  const NonlocalityTimes t = nonlocality_times(rho0, DecayParams(1.0, 0.3));
  CHECK(t.t2 == 0.0);
  CHECK(t.t1 > 0.0);
  CHECK(t.t1_dominates);
  CHECK(t.t_n == t.t1);
  CHECK(t.locality_verified);
  CHECK(n_value(evolve_analytic(rho0, DecayParams(1.0, 0.3), 0.999 * t.t1)) > 0.0);
}

TEST_CASE("random nonlocal Class22 states lose violation at t_n") {
  Rng rng(41);
  int tested = 0;
  for (int i = 0; i < 400 && tested < 40; ++i) {
    const TwoQubitState rho0 = random_class22(rng);
    if (n_value(rho0) <= 1e-6) continue;
    ++tested;
    const DecayParams p(1.0, 0.9 * (i % 10) / 9.0);
    const NonlocalityTimes t = nonlocality_times(rho0, p);
    CHECK(t.t_n == std::max(t.t1, t.t2));
    CHECK(t.t1 >= 0.0);
    CHECK(t.t2 >= 0.0);
    CHECK(t.locality_verified);
    if (t.t_n > 1e-6) {
      CHECK(n_value(evolve_analytic(rho0, p, 0.99 * t.t_n)) > 0.0);
    }
  }
  CHECK(tested == 40);
}

TEST_CASE("nonlocality decays while entanglement revives") {
  const DecayParams p(1.0, 0.7);
  const TwoQubitState rho0 = theta_pi_state(0.3);
  const auto curve = nonlocality_curve(rho0, p, 15.0, 1000);
  CHECK(curve.size() == 1000);
  CHECK(non_increasing(curve, 1e-9));
  const auto report = extrema_theta_pi(0.5 * std::asin(0.3), p);
  REQUIRE(report.c_max);
  CHECK(*report.c_max > 0.3);

  for (double c : {0.8, 0.9, 1.0}) {
    const auto family = nonlocality_curve(theta_pi_state(c), p, 15.0, 1000);
    CHECK(non_increasing(family, 1e-9));
    CHECK(family.front().second > 0.0);
    CHECK(family.back().second == 0.0);
  }

  for (const auto& [t, n] :
       nonlocality_curve(TwoQubitState::basis_projector(basis::k00), p, 5.0, 20)) {
    CHECK(n == 0.0);
  }
}

TEST_CASE("below g = 1/sqrt 2 the coherence bound is never crossed") {
  const double bound = 1.0 / (2.0 * std::numbers::sqrt2);
  for (double g : {0.3, 0.5, 0.7}) {
    const DecayParams p(1.0, g);
    for (double c : {0.05, 0.2, 0.4, 0.6, 0.7}) {
      if (c >= g) continue;
      const TwoQubitState rho0 = theta_pi_state(c);
      REQUIRE(std::abs(rho0(basis::k10, basis::k01)) < bound);
      for (int i = 1; i <= 1000; ++i) {
        const double t = 15.0 * i / 1000.0;
        CHECK(std::abs(evolve_analytic(rho0, p, t)(basis::k10, basis::k01)) < bound);
      }
    }
  }
}

// Closed-form concurrence evolution for single-excitation initial states,
// and the critical times/values of the special pure-state families.

#pragma once

#include "dicke/dynamics.hpp"
#include "dicke/qstate.hpp"
#include "dicke/search.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dicke {

/// 2 e^{-g0 t} |Re rho_23 cosh(gt) + i Im rho_23 - (rho_22 + rho_33)/2 sinh(gt)|.
double concurrence_at(const TwoQubitState& rho0, const DecayParams& params, double t);

/// The same quantity written directly in the pure-state angles:
/// e^{-g0 t} cos^2 psi |sin 2phi cos theta cosh(gt) - sinh(gt) - i sin 2phi sin theta|.
double concurrence_pure(const PureStateAngles& angles, const DecayParams& params, double t);

std::vector<std::pair<double, double>> concurrence_curve(const TwoQubitState& rho0,
                                                         const DecayParams& params, double t_end,
                                                         std::size_t n_samples);

enum class ExtremumCase { SingleExcitation, ThetaZero, ThetaPi, ThetaHalfPi, Generic };
std::string to_string(ExtremumCase c);

/// Default horizon for numeric searches, in units of 1/gamma0.
inline constexpr double kSearchHorizon = 15.0;
/// Agreement required between closed forms and the numeric search.
inline constexpr double kCrossCheckTolerance = 1e-6;

struct ExtremumReport {
  ExtremumCase case_tag = ExtremumCase::Generic;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<double> c_min;
  std::optional<double> c_max;
  bool monotone = false;
  /// Concurrence at t = 0.
  double c_initial = 0.0;
  /// Set for families where the revival question is meaningful.
  std::optional<bool> exceeds_initial;
  /// Interior extrema found by the grid + golden-section search.
  std::vector<search::CriticalPoint> numeric_check;
  /// Largest |closed form - numeric| over matched critical times and values.
  std::optional<double> deviation;
  /// Closed form skipped in favour of the numeric search.
  bool numeric_fallback = false;
  std::vector<std::string> notes;

  bool consistent() const { return !deviation || *deviation <= kCrossCheckTolerance; }
};

/// Family cos(psi)|10> + sin(psi)e^{i xi}|00> (phi = 0; phi = pi/2 is equivalent).
ExtremumReport extrema_single_excitation(double psi, const DecayParams& params);
/// cos(phi)|10> + sin(phi)|01>.
ExtremumReport extrema_theta_zero(double phi, const DecayParams& params);
/// cos(phi)|10> - sin(phi)|01>.
ExtremumReport extrema_theta_pi(double phi, const DecayParams& params);
/// cos(phi)|10> + i sin(phi)|01>.
ExtremumReport extrema_theta_half_pi(double phi, const DecayParams& params);

/// Numeric search of concurrence_at over (0, t_end]; t_end <= 0 selects
/// kSearchHorizon / gamma0.
ExtremumReport extrema_numeric(const TwoQubitState& rho0, const DecayParams& params,
                               double t_end = 0.0);

/// Picks the closed-form family matching the angles, or the numeric search.
ExtremumReport extrema_for_pure(const PureStateAngles& angles, const DecayParams& params);

}  // namespace dicke

// Loss of CHSH violation along the closed-form trajectory.

#pragma once

#include "dicke/chsh.hpp"
#include "dicke/dynamics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dicke {

struct NonlocalityTimes {
  /// Last time rho_22 rho_33 - S_L/2 falls to zero (0 if never positive).
  double t1 = 0.0;
  /// Last time |rho_23| falls to 1/(2 sqrt 2) (0 if never above).
  double t2 = 0.0;
  /// max(t1, t2): no CHSH violation afterwards.
  double t_n = 0.0;

  bool initially_local = false;
  /// Either condition crossed zero more than once before settling.
  bool multiple_crossings = false;
  /// t1 > t2, i.e. the rho_22 rho_33 condition decides t_n.
  bool t1_dominates = false;
  /// n(rho(t)) == 0 (full m computation) on a grid over [t_n, horizon].
  bool locality_verified = false;
  double verification_horizon = 0.0;
  std::vector<std::string> notes;
};

/// Class22 initial states only (std::invalid_argument otherwise). An initially
/// local state yields zeros with initially_local set.
NonlocalityTimes nonlocality_times(const TwoQubitState& rho0, const DecayParams& params);

/// (t, n(rho(t))) on a uniform grid along evolve_analytic; Class22 inputs only.
std::vector<std::pair<double, double>> nonlocality_curve(const TwoQubitState& rho0,
                                                         const DecayParams& params, double t_end,
                                                         std::size_t n_samples);

}  // namespace dicke

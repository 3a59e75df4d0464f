// Two-atom spontaneous-emission dynamics: the dissipative generator, a
// fixed-step RK4 integrator, and the closed-form propagator for states
// with zero first row and column.
//
// Times are absolute (same units as 1/gamma0). With gamma0 = 1 they coincide
// with the dimensionless gamma0*t axis.

#pragma once

#include "dicke/qstate.hpp"
#include "dicke/trajectory.hpp"

#include <cstddef>
#include <stdexcept>

namespace dicke {

/// Raised for g >= 1 or gamma0 <= 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when the integrator produces a state outside tolerance.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecayParams {
 public:
  /// gamma0 > 0 and 0 <= g < 1; throws DomainError otherwise. The g -> 1
  /// (vanishing separation) regime is not supported.
  DecayParams(double gamma0, double g);

  double gamma0() const { return gamma0_; }
  double g() const { return g_; }
  /// Photon-exchange rate g * gamma0.
  double gamma() const { return g_ * gamma0_; }

 private:
  double gamma0_;
  double g_;
};

/// d rho / dt for an arbitrary 4x4 matrix (need not be a valid state).
Matrix4c lindblad_rhs(const Matrix4c& rho, const DecayParams& params);
Matrix4c lindblad_rhs(const TwoQubitState& rho, const DecayParams& params);

/// Real 16x16 matrix of the generator acting on row-major vec(rho).
Eigen::Matrix<double, 16, 16> lindblad_superoperator(const DecayParams& params);

/// Default integration step in units of 1/gamma0.
inline constexpr double kDefaultStep = 1e-3;

struct NumericOptions {
  /// Store every k-th step (the final step is always stored).
  std::size_t record_every = 1;
  /// Compute C, m, n, S_L and min eigenvalue for every stored sample.
  bool compute_scalars = true;
  Tolerances tolerances = Tolerances::trajectory();
};

/// Classical RK4 with step t_end / n_steps. Throws IntegrationError when a
/// stored sample leaves the tolerance band, std::invalid_argument for bad sizes.
Trajectory evolve_numeric(const TwoQubitState& rho0, const DecayParams& params, double t_end,
                          std::size_t n_steps, const NumericOptions& options = {});

/// Closed-form state at time t; Class12/Class22 inputs only (std::invalid_argument otherwise).
TwoQubitState evolve_analytic(const TwoQubitState& rho0, const DecayParams& params, double t);

/// Uniform grid of n_samples >= 2 points on [0, t_end] sampled from evolve_analytic.
Trajectory analytic_trajectory(const TwoQubitState& rho0, const DecayParams& params, double t_end,
                               std::size_t n_samples, bool compute_scalars = true);

/// Analytic path for single-excitation inputs, RK4 otherwise. For the RK4
/// path the step is at most kDefaultStep / gamma0 and lands on every sample.
Trajectory evolve(const TwoQubitState& rho0, const DecayParams& params, double t_end,
                  std::size_t n_samples);

/// The unique stationary state |00><00|.
TwoQubitState asymptotic_state(const DecayParams& params);

}  // namespace dicke

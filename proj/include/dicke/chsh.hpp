// CHSH machinery: correlation matrix, Horodecki m(rho), Bell-operator
// expectations, and the shortcuts for states with only rho_22, rho_33,
// rho_23 and rho_44 nonzero.

#pragma once

#include "dicke/qstate.hpp"

#include <Eigen/Dense>

namespace dicke {

/// t_nm = tr(rho sigma_n x sigma_m), n, m in {1, 2, 3}.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(const Eigen::Matrix3d& t);
  const Eigen::Matrix3d& matrix() const { return t_; }
  double operator()(int n, int m) const { return t_(n, m); }

 private:
  Eigen::Matrix3d t_;
};

/// Measurement directions of the Bell operator
///   a.s x (b + b').s + a'.s x (b - b').s
class BellSettings {
 public:
  /// Throws std::invalid_argument unless every vector has unit norm within 1e-12.
  BellSettings(const Eigen::Vector3d& a, const Eigen::Vector3d& a_prime,
               const Eigen::Vector3d& b, const Eigen::Vector3d& b_prime);

  const Eigen::Vector3d& a() const { return a_; }
  const Eigen::Vector3d& a_prime() const { return a_prime_; }
  const Eigen::Vector3d& b() const { return b_; }
  const Eigen::Vector3d& b_prime() const { return b_prime_; }

 private:
  Eigen::Vector3d a_, a_prime_, b_, b_prime_;
};

CorrelationMatrix correlation_matrix(const TwoQubitState& rho);

/// Sum of the two largest eigenvalues of T^T T.
double m_value(const TwoQubitState& rho);

/// Maximal CHSH expectation over all settings, 2 sqrt(m).
double chsh_max(const TwoQubitState& rho);

Matrix4c bell_operator(const BellSettings& settings);
double chsh_expectation(const TwoQubitState& rho, const BellSettings& settings);

/// max(2 C^2, (1 - 2 rho_44)^2 + C^2) with C = 2|rho_23|; Class22 only.
double m_class22(const TwoQubitState& rho);

/// Threshold used when comparing m (or an equivalent quantity) against 1.
inline constexpr double kViolationTolerance = 1e-12;

struct Class22Violation {
  bool coherence_condition = false;  // |rho_23| > 1/(2 sqrt 2)
  bool purity_condition = false;     // rho_22 rho_33 > S_L / 2
  bool violates = false;             // m_class22 > 1
};

/// Evaluates both sides of the iff-criterion for Class22 states. Throws
/// std::logic_error if the disjunction disagrees with m_class22 > 1.
Class22Violation chsh_criterion_class22(const TwoQubitState& rho);
bool violates_chsh_class22(const TwoQubitState& rho);

/// max(0, m - 1).
double n_value(const TwoQubitState& rho);

}  // namespace dicke

#include "dicke/chsh.hpp"

#include "dicke/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

void require_class22(const TwoQubitState& rho, const char* what) {
  if (classify(rho) != StateClass::Class22) {
    throw std::invalid_argument(std::string(what) +
                                " requires a state with only rho_22, rho_33, rho_23, rho_44 nonzero");
  }
}

bool is_unit(const Eigen::Vector3d& v) {
  return v.allFinite() && std::abs(v.norm() - 1.0) <= 1e-12;
}

}  // namespace

CorrelationMatrix::CorrelationMatrix(const Eigen::Matrix3d& t) : t_(t) {
  if (!t.allFinite() || t.cwiseAbs().maxCoeff() > 1.0 + 1e-9) {
    throw std::invalid_argument("correlation matrix entries must lie in [-1, 1]");
  }
}

BellSettings::BellSettings(const Eigen::Vector3d& a, const Eigen::Vector3d& a_prime,
                           const Eigen::Vector3d& b, const Eigen::Vector3d& b_prime)
    : a_(a), a_prime_(a_prime), b_(b), b_prime_(b_prime) {
  if (!is_unit(a) || !is_unit(a_prime) || !is_unit(b) || !is_unit(b_prime)) {
    throw std::invalid_argument("Bell settings must be unit vectors");
  }
}

CorrelationMatrix correlation_matrix(const TwoQubitState& rho) {
  Eigen::Matrix3d t;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m)
      t(n, m) = (rho.matrix() * pauli::kron(pauli::sigma(n + 1), pauli::sigma(m + 1)))
                    .trace()
                    .real();
  return CorrelationMatrix(t);
}

double m_value(const TwoQubitState& rho) {
  const Eigen::Matrix3d t = correlation_matrix(rho).matrix();
  const Eigen::Matrix3d u = t.transpose() * t;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(u, Eigen::EigenvaluesOnly);
  // Ascending order.
  const Eigen::Vector3d ev = solver.eigenvalues();
  return std::clamp(ev(1) + ev(2), 0.0, 2.0);
}

double chsh_max(const TwoQubitState& rho) { return 2.0 * std::sqrt(m_value(rho)); }

Matrix4c bell_operator(const BellSettings& s) {
  return pauli::kron(pauli::dot(s.a()), pauli::dot(s.b() + s.b_prime())) +
         pauli::kron(pauli::dot(s.a_prime()), pauli::dot(s.b() - s.b_prime()));
}

double chsh_expectation(const TwoQubitState& rho, const BellSettings& settings) {
  return (rho.matrix() * bell_operator(settings)).trace().real();
}

double m_class22(const TwoQubitState& rho) {
  require_class22(rho, "m_class22");
  const double c = 2.0 * std::abs(rho(basis::k10, basis::k01));
  const double z = 1.0 - 2.0 * rho(basis::k00, basis::k00).real();
  return std::max(2.0 * c * c, z * z + c * c);
}

Class22Violation chsh_criterion_class22(const TwoQubitState& rho) {
  require_class22(rho, "chsh_criterion_class22");
  const double r22 = rho(basis::k10, basis::k10).real();
  const double r33 = rho(basis::k01, basis::k01).real();
  const double coh = std::abs(rho(basis::k10, basis::k01));
  const double s_linear = 1.0 - (rho.matrix() * rho.matrix()).trace().real();

  // Both conditions are scaled to the units of m - 1 so that one tolerance applies.
  Class22Violation out;
  out.coherence_condition = 8.0 * coh * coh - 1.0 > kViolationTolerance;
  out.purity_condition = 4.0 * (r22 * r33 - 0.5 * s_linear) > kViolationTolerance;
  out.violates = m_class22(rho) - 1.0 > kViolationTolerance;
  if (out.violates != (out.coherence_condition || out.purity_condition)) {
    throw std::logic_error("CHSH criterion disagrees with m(rho) > 1");
  }
  return out;
}

bool violates_chsh_class22(const TwoQubitState& rho) { return chsh_criterion_class22(rho).violates; }

double n_value(const TwoQubitState& rho) { return std::max(0.0, m_value(rho) - 1.0); }

}  // namespace dicke

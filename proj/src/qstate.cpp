#include "dicke/qstate.hpp"

#include "dicke/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dicke {

namespace {

Eigen::Vector4d hermitian_eigenvalues(const Matrix4c& m) {
  const Matrix4c herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw InvalidState("eigendecomposition did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace

StateDiagnostics diagnose(const Matrix4c& m) {
  StateDiagnostics d;
  d.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  d.trace_error = std::abs(m.trace() - Complex{1.0, 0.0});
  d.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
  return d;
}

double min_eigenvalue(const Matrix4c& m) { return hermitian_eigenvalues(m).minCoeff(); }

TwoQubitState TwoQubitState::from_matrix(const Matrix4c& m, const Tolerances& tol) {
  if (!m.allFinite()) throw InvalidState("density matrix has non-finite entries");
  const StateDiagnostics d = diagnose(m);
  std::ostringstream why;
  if (d.hermiticity_error > tol.hermiticity) {
    why << "not Hermitian (max deviation " << d.hermiticity_error << ")";
  } else if (d.trace_error > tol.trace) {
    why << "trace differs from 1 by " << d.trace_error;
  } else if (d.min_eigenvalue < -tol.psd) {
    why << "not positive semidefinite (min eigenvalue " << d.min_eigenvalue << ")";
  }
  if (!why.str().empty()) throw InvalidState("invalid density matrix: " + why.str());
  return TwoQubitState(m);
}

TwoQubitState TwoQubitState::basis_projector(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("basis index must be in [0, 3]");
  Matrix4c m = Matrix4c::Zero();
  m(index, index) = 1.0;
  return TwoQubitState(m);
}

TwoQubitState TwoQubitState::from_pure(const Vector4c& v, const Tolerances& tol) {
  return from_matrix(v * v.adjoint(), tol);
}

PureStateAngles::PureStateAngles(double phi, double psi, double theta, double xi)
    : phi_(phi), psi_(psi), theta_(theta), xi_(xi) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto in = [](double v, double lo, double hi, bool closed_hi) {
    return std::isfinite(v) && v >= lo && (closed_hi ? v <= hi : v < hi);
  };
  if (!in(phi, 0.0, half_pi, true)) throw std::invalid_argument("phi must lie in [0, pi/2]");
  if (!in(psi, 0.0, half_pi, true)) throw std::invalid_argument("psi must lie in [0, pi/2]");
  if (!in(theta, 0.0, two_pi, false)) throw std::invalid_argument("theta must lie in [0, 2 pi)");
  if (!in(xi, 0.0, two_pi, false)) throw std::invalid_argument("xi must lie in [0, 2 pi)");
}

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::General: return "General";
    case StateClass::Class12: return "Class12";
    case StateClass::Class22: return "Class22";
  }
  return "General";
}

Vector4c pure_vector(const PureStateAngles& a) {
  Vector4c v;
  v(basis::k11) = 0.0;
  v(basis::k10) = std::cos(a.phi()) * std::cos(a.psi());
  v(basis::k01) = std::sin(a.phi()) * std::cos(a.psi()) * std::polar(1.0, a.theta());
  v(basis::k00) = std::sin(a.psi()) * std::polar(1.0, a.xi());
  return v;
}

TwoQubitState make_pure(const PureStateAngles& angles) {
  return TwoQubitState::from_pure(pure_vector(angles));
}

StateClass classify(const Matrix4c& m, double tol) {
  for (int k = 0; k < 4; ++k) {
    if (std::abs(m(basis::k11, k)) > tol || std::abs(m(k, basis::k11)) > tol) {
      return StateClass::General;
    }
  }
  const bool class22 = std::abs(m(basis::k10, basis::k00)) <= tol &&
                       std::abs(m(basis::k01, basis::k00)) <= tol &&
                       std::abs(m(basis::k00, basis::k10)) <= tol &&
                       std::abs(m(basis::k00, basis::k01)) <= tol;
  return class22 ? StateClass::Class22 : StateClass::Class12;
}

StateClass classify(const TwoQubitState& rho, double tol) { return classify(rho.matrix(), tol); }

Matrix4c spin_flip(const Matrix4c& rho) {
  const Matrix4c yy = pauli::kron(pauli::sigma(2), pauli::sigma(2));
  return yy * rho.conjugate() * yy;
}

Matrix4c hermitian_sqrt(const Matrix4c& m, double clamp) {
  const Matrix4c herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw InvalidState("matrix square root: eigendecomposition did not converge");
  }
  Eigen::Vector4d values = solver.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (values(i) < -clamp) {
      throw InvalidState("matrix square root of a non-PSD matrix (eigenvalue " +
                         std::to_string(values(i)) + ")");
    }
    values(i) = std::sqrt(std::max(values(i), 0.0));
  }
  return solver.eigenvectors() * values.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

namespace {
// Eigenvalues of a valid state below this are treated as rounding noise.
constexpr double kEigenNoise = 1e-14;
}  // namespace

double concurrence(const TwoQubitState& rho) {
  // Spectrum of hat(rho) = (sqrt(rho) rho~ sqrt(rho))^{1/2} taken as the singular
  // values of sqrt(rho) sqrt(rho~), with sqrt(rho~) = spin_flip(sqrt(rho)). Avoids a
  // second square root, which would turn rounding noise into ~1e-8 errors.
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(0.5 * (rho.matrix() + rho.matrix().adjoint()));
  if (eig.info() != Eigen::Success) {
    throw InvalidState("concurrence: eigendecomposition did not converge");
  }
  Eigen::Vector4d values = eig.eigenvalues();
  for (int i = 0; i < 4; ++i) values(i) = values(i) > kEigenNoise ? std::sqrt(values(i)) : 0.0;
  const Matrix4c root =
      eig.eigenvectors() * values.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
  Eigen::JacobiSVD<Matrix4c> svd(root * spin_flip(root));
  const Eigen::Vector4d p = svd.singularValues();
  const double c = 2.0 * p.maxCoeff() - p.sum();
  return std::clamp(c, 0.0, 1.0);
}

double concurrence_single_excitation(const TwoQubitState& rho) {
  if (!is_single_excitation(classify(rho))) {
    throw std::invalid_argument("2|rho_23| shortcut requires a state with zero first row/column");
  }
  return std::min(1.0, 2.0 * std::abs(rho(basis::k10, basis::k01)));
}

double binary_entropy(double p) {
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double entanglement_of_formation(const TwoQubitState& rho) {
  return eof_from_concurrence(concurrence(rho));
}

Matrix2c reduced_state_a(const Matrix4c& rho) {
  Matrix2c out = Matrix2c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) out(a, b) += rho(2 * a + k, 2 * b + k);
  return out;
}

double pure_entanglement(const PureStateAngles& angles) {
  const Matrix2c reduced = reduced_state_a(make_pure(angles).matrix());
  Eigen::SelfAdjointEigenSolver<Matrix2c> solver(reduced, Eigen::EigenvaluesOnly);
  double e = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 0.0) e -= p * std::log2(p);
  }
  return std::clamp(e, 0.0, 1.0);
}

double linear_entropy(const TwoQubitState& rho) {
  const double purity = (rho.matrix() * rho.matrix()).trace().real();
  return std::clamp(1.0 - purity, 0.0, 0.75);
}

}  // namespace dicke

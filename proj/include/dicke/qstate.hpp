// Two-qubit density matrices and static entanglement measures.
//
// Every matrix in this library is written in the fixed basis
//   |1>|1>, |1>|0>, |0>|1>, |0>|0>
// with |1> the excited and |0> the ground state of each atom. The index
// constants in `basis` name those rows/columns.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace dicke {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;
using Matrix2c = Eigen::Matrix<Complex, 2, 2>;

namespace basis {
inline constexpr int k11 = 0;
inline constexpr int k10 = 1;
inline constexpr int k01 = 2;
inline constexpr int k00 = 3;
}  // namespace basis

/// Thrown when a matrix fails the density-matrix invariants.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Acceptance thresholds for density-matrix validation.
struct Tolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double psd = 1e-10;  // smallest eigenvalue allowed is -psd

  /// Looser thresholds for states produced by time integration.
  static constexpr Tolerances trajectory() { return {1e-12, 1e-9, 1e-8}; }
};

struct StateDiagnostics {
  double hermiticity_error = 0.0;  // max |m_jk - conj(m_kj)|
  double trace_error = 0.0;        // |tr m - 1|
  double min_eigenvalue = 0.0;     // of the Hermitian part
};

StateDiagnostics diagnose(const Matrix4c& m);

/// Immutable, validated 4x4 density matrix.
class TwoQubitState {
 public:
  /// Validates `m` against `tol`; throws InvalidState on failure.
  static TwoQubitState from_matrix(const Matrix4c& m, const Tolerances& tol = {});

  /// Projector onto one basis vector, e.g. basis::k00 for the ground state.
  static TwoQubitState basis_projector(int index);

  /// |v><v| for a normalized vector v.
  static TwoQubitState from_pure(const Vector4c& v, const Tolerances& tol = {});

  const Matrix4c& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

 private:
  explicit TwoQubitState(const Matrix4c& m) : rho_(m) {}
  Matrix4c rho_;
};

/// Angles of the general single-excitation pure state
///   cos(phi)cos(psi)|10> + sin(phi)cos(psi)e^{i theta}|01> + sin(psi)e^{i xi}|00>.
class PureStateAngles {
 public:
  /// phi, psi in [0, pi/2]; theta, xi in [0, 2 pi). Throws std::invalid_argument.
  PureStateAngles(double phi, double psi, double theta, double xi);

  double phi() const { return phi_; }
  double psi() const { return psi_; }
  double theta() const { return theta_; }
  double xi() const { return xi_; }

 private:
  double phi_;
  double psi_;
  double theta_;
  double xi_;
};

enum class StateClass {
  General,
  Class12,  // zero first row and column
  Class22,  // Class12 with rho_24 = rho_34 = 0
};

std::string to_string(StateClass c);

inline constexpr double kClassTolerance = 1e-12;

TwoQubitState make_pure(const PureStateAngles& angles);
Vector4c pure_vector(const PureStateAngles& angles);

StateClass classify(const TwoQubitState& rho, double tol = kClassTolerance);
StateClass classify(const Matrix4c& m, double tol = kClassTolerance);
inline bool is_single_excitation(StateClass c) { return c != StateClass::General; }

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
Matrix4c spin_flip(const Matrix4c& rho);

/// Hermitian square root; eigenvalues in [-clamp, 0) are set to zero.
/// Throws InvalidState if the decomposition fails or an eigenvalue is below -clamp.
Matrix4c hermitian_sqrt(const Matrix4c& m, double clamp = 1e-10);

/// Wootters concurrence from the spectrum of (rho^1/2 rho~ rho^1/2)^1/2.
double concurrence(const TwoQubitState& rho);

/// 2|rho_23|; valid only for Class12/Class22 states (throws std::invalid_argument otherwise).
double concurrence_single_excitation(const TwoQubitState& rho);

double binary_entropy(double p);

/// Entanglement of formation as the standard monotone function of concurrence.
double eof_from_concurrence(double c);
double entanglement_of_formation(const TwoQubitState& rho);

/// Partial trace over the second atom.
Matrix2c reduced_state_a(const Matrix4c& rho);

/// Von Neumann entropy (base 2) of the reduced state of the pure state.
double pure_entanglement(const PureStateAngles& angles);

/// 1 - tr rho^2.
double linear_entropy(const TwoQubitState& rho);

double min_eigenvalue(const Matrix4c& m);

}  // namespace dicke

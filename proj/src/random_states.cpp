#include "dicke/random_states.hpp"

#include <cmath>
#include <numbers>

namespace dicke {

namespace {

template <int N>
Eigen::Matrix<Complex, N, N> ginibre_density(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix<Complex, N, N> a;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = Complex{normal(rng), normal(rng)};
  Eigen::Matrix<Complex, N, N> m = a * a.adjoint();
  m /= m.trace().real();
  return 0.5 * (m + m.adjoint());
}

}  // namespace

TwoQubitState random_class12(Rng& rng) {
  Matrix4c m = Matrix4c::Zero();
  m.block<3, 3>(1, 1) = ginibre_density<3>(rng);
  return TwoQubitState::from_matrix(m);
}

TwoQubitState random_class22(Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double w[3] = {expo(rng), expo(rng), expo(rng)};
  const double total = w[0] + w[1] + w[2];
  const double r22 = w[0] / total;
  const double r33 = w[1] / total;
  const double r44 = 1.0 - r22 - r33;
  const Complex r23 = unit(rng) * std::sqrt(r22 * r33) *
                      std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
  Matrix4c m = Matrix4c::Zero();
  m(basis::k10, basis::k10) = r22;
  m(basis::k01, basis::k01) = r33;
  m(basis::k00, basis::k00) = r44;
  m(basis::k10, basis::k01) = r23;
  m(basis::k01, basis::k10) = std::conj(r23);
  return TwoQubitState::from_matrix(m);
}

TwoQubitState random_state(Rng& rng) {
  return TwoQubitState::from_matrix(ginibre_density<4>(rng));
}

PureStateAngles random_angles(Rng& rng) {
  const double half_pi = std::numbers::pi / 2.0;
  std::uniform_real_distribution<double> quarter(0.0, half_pi);
  std::uniform_real_distribution<double> full(0.0, 2.0 * std::numbers::pi);
  return PureStateAngles(quarter(rng), quarter(rng), full(rng), full(rng));
}

}  // namespace dicke

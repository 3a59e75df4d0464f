#include "dicke/dynamics.hpp"

#include "dicke/pauli.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace dicke {

DecayParams::DecayParams(double gamma0, double g) : gamma0_(gamma0), g_(g) {
  if (!std::isfinite(gamma0) || gamma0 <= 0.0) {
    throw DomainError("gamma0 must be a positive finite rate");
  }
  if (!std::isfinite(g) || g < 0.0) throw DomainError("g must lie in [0, 1)");
  if (g >= 1.0) {
    throw DomainError(
        "g >= 1 (coincident atoms, gamma = gamma0) is outside the supported regime; use g < 1");
  }
}

Matrix4c lindblad_rhs(const Matrix4c& rho, const DecayParams& params) {
  static const auto lower = pauli::atom_lowering();
  const double rates[2][2] = {{params.gamma0(), params.gamma()},
                              {params.gamma(), params.gamma0()}};
  Matrix4c out = Matrix4c::Zero();
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const Matrix4c& lower_k = lower[k];
      const Matrix4c& lower_l = lower[l];
      const Matrix4c raise_k = lower_k.adjoint();
      const Matrix4c raise_l = lower_l.adjoint();
      const Matrix4c number = raise_k * lower_l;
      out += 0.5 * rates[k][l] *
             (2.0 * lower_k * rho * raise_l - number * rho - rho * number);
    }
  }
  return out;
}

Matrix4c lindblad_rhs(const TwoQubitState& rho, const DecayParams& params) {
  return lindblad_rhs(rho.matrix(), params);
}

Eigen::Matrix<double, 16, 16> lindblad_superoperator(const DecayParams& params) {
  Eigen::Matrix<double, 16, 16> super;
  for (int col = 0; col < 16; ++col) {
    Matrix4c unit = Matrix4c::Zero();
    unit(col / 4, col % 4) = 1.0;
    const Matrix4c image = lindblad_rhs(unit, params);
    for (int row = 0; row < 16; ++row) super(row, col) = image(row / 4, row % 4).real();
  }
  return super;
}

namespace {

// Real and imaginary parts of row-major vec(rho).
using VecState = Eigen::Matrix<double, 16, 2>;

VecState to_vec(const Matrix4c& m) {
  VecState v;
  for (int i = 0; i < 16; ++i) {
    v(i, 0) = m(i / 4, i % 4).real();
    v(i, 1) = m(i / 4, i % 4).imag();
  }
  return v;
}

Matrix4c from_vec(const VecState& v) {
  Matrix4c m;
  for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = Complex{v(i, 0), v(i, 1)};
  return m;
}

void require_single_excitation(const TwoQubitState& rho, const char* what) {
  if (!is_single_excitation(classify(rho))) {
    throw std::invalid_argument(std::string(what) +
                                ": closed form requires a state with zero first row and column");
  }
}

}  // namespace

Trajectory evolve_numeric(const TwoQubitState& rho0, const DecayParams& params, double t_end,
                          std::size_t n_steps, const NumericOptions& options) {
  if (n_steps < 1) throw std::invalid_argument("evolve_numeric: n_steps must be >= 1");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("evolve_numeric: t_end must be positive");
  }
  const std::size_t every = std::max<std::size_t>(1, options.record_every);
  const Eigen::Matrix<double, 16, 16> super = lindblad_superoperator(params);
  const double h = t_end / static_cast<double>(n_steps);

  std::vector<double> times;
  std::vector<TwoQubitState> states;
  std::vector<SampleScalars> scalars;
  const std::size_t expected = n_steps / every + 2;
  times.reserve(expected);
  states.reserve(expected);
  if (options.compute_scalars) scalars.reserve(expected);

  auto record = [&](std::size_t step, const VecState& v) {
    Matrix4c m = from_vec(v);
    m = 0.5 * (m + m.adjoint()).eval();
    const double t = t_end * static_cast<double>(step) / static_cast<double>(n_steps);
    try {
      states.push_back(TwoQubitState::from_matrix(m, options.tolerances));
    } catch (const InvalidState& e) {
      std::ostringstream msg;
      msg << "integration failure at t = " << t << " (step " << h << "): " << e.what();
      throw IntegrationError(msg.str());
    }
    times.push_back(t);
    if (options.compute_scalars) scalars.push_back(compute_scalars(states.back()));
  };

  VecState v = to_vec(rho0.matrix());
  record(0, v);
  for (std::size_t step = 1; step <= n_steps; ++step) {
    const VecState k1 = super * v;
    const VecState k2 = super * (v + 0.5 * h * k1);
    const VecState k3 = super * (v + 0.5 * h * k2);
    const VecState k4 = super * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (step % every == 0 || step == n_steps) record(step, v);
  }
  return Trajectory(params.gamma0(), params.g(), PropagationPath::Numeric, std::move(times),
                    std::move(states), std::move(scalars));
}

TwoQubitState evolve_analytic(const TwoQubitState& rho0, const DecayParams& params, double t) {
  require_single_excitation(rho0, "evolve_analytic");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("evolve_analytic: t must be a nonnegative time");
  }
  if (t == 0.0) return rho0;

  using namespace basis;
  const double g0 = params.gamma0();
  const double g1 = params.gamma();
  const Matrix4c& r = rho0.matrix();
  const double sum = r(k10, k10).real() + r(k01, k01).real();
  const double diff = r(k10, k10).real() - r(k01, k01).real();
  const double re23 = r(k10, k01).real();
  const double im23 = r(k10, k01).imag();

  // e^{-g0 t} cosh(g1 t) and e^{-g0 t} sinh(g1 t) without overflow.
  const double slow = std::exp(-(g0 - g1) * t);
  const double fast = std::exp(-(g0 + g1) * t);
  const double ech = 0.5 * (slow + fast);
  const double esh = 0.5 * (slow - fast);
  const double decay = std::exp(-g0 * t);
  const double slow_half = std::exp(-0.5 * (g0 - g1) * t);
  const double fast_half = std::exp(-0.5 * (g0 + g1) * t);
  const double ech_half = 0.5 * (slow_half + fast_half);
  const double esh_half = 0.5 * (slow_half - fast_half);

  Matrix4c out = Matrix4c::Zero();
  const double r22 = 0.5 * diff * decay + 0.5 * sum * ech - re23 * esh;
  const double r33 = -0.5 * diff * decay + 0.5 * sum * ech - re23 * esh;
  const Complex r23{re23 * ech - 0.5 * sum * esh, im23 * decay};
  const Complex r24 = r(k10, k00) * ech_half - r(k01, k00) * esh_half;
  const Complex r34 = r(k01, k00) * ech_half - r(k10, k00) * esh_half;
  const double r44 = 1.0 - r22 - r33;
  assert(std::abs(r44 - (1.0 - sum * ech + 2.0 * re23 * esh)) < 1e-9);

  out(k10, k10) = r22;
  out(k01, k01) = r33;
  out(k00, k00) = r44;
  out(k10, k01) = r23;
  out(k01, k10) = std::conj(r23);
  out(k10, k00) = r24;
  out(k00, k10) = std::conj(r24);
  out(k01, k00) = r34;
  out(k00, k01) = std::conj(r34);
  return TwoQubitState::from_matrix(out, Tolerances::trajectory());
}

Trajectory analytic_trajectory(const TwoQubitState& rho0, const DecayParams& params, double t_end,
                               std::size_t n_samples, bool compute_scalars_flag) {
  require_single_excitation(rho0, "analytic_trajectory");
  if (n_samples < 2) throw std::invalid_argument("analytic_trajectory: n_samples must be >= 2");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("analytic_trajectory: t_end must be positive");
  }
  std::vector<double> times(n_samples);
  std::vector<TwoQubitState> states;
  std::vector<SampleScalars> scalars;
  states.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    times[i] = t_end * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    states.push_back(evolve_analytic(rho0, params, times[i]));
    if (compute_scalars_flag) scalars.push_back(compute_scalars(states.back()));
  }
  return Trajectory(params.gamma0(), params.g(), PropagationPath::Analytic, std::move(times),
                    std::move(states), std::move(scalars));
}

Trajectory evolve(const TwoQubitState& rho0, const DecayParams& params, double t_end,
                  std::size_t n_samples) {
  if (is_single_excitation(classify(rho0))) {
    return analytic_trajectory(rho0, params, t_end, n_samples);
  }
  if (n_samples < 2) throw std::invalid_argument("evolve: n_samples must be >= 2");
  const std::size_t intervals = n_samples - 1;
  const double max_step = kDefaultStep / params.gamma0();
  const auto per_interval = static_cast<std::size_t>(
      std::ceil(t_end / static_cast<double>(intervals) / max_step - 1e-9));
  NumericOptions options;
  options.record_every = std::max<std::size_t>(1, per_interval);
  return evolve_numeric(rho0, params, t_end, options.record_every * intervals, options);
}

TwoQubitState asymptotic_state(const DecayParams&) {
  return TwoQubitState::basis_projector(basis::k00);
}

}  // namespace dicke

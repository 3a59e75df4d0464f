#include "dicke/trajectory.hpp"

#include "dicke/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {

SampleScalars compute_scalars(const TwoQubitState& rho) {
  SampleScalars s;
  s.concurrence = concurrence(rho);
  s.m = m_value(rho);
  s.n = std::max(0.0, s.m - 1.0);
  s.linear_entropy = linear_entropy(rho);
  s.trace_error = std::abs(rho.matrix().trace() - Complex{1.0, 0.0});
  s.min_eigenvalue = min_eigenvalue(rho.matrix());
  return s;
}

std::string to_string(PropagationPath path) {
  return path == PropagationPath::Analytic ? "analytic" : "numeric";
}

Trajectory::Trajectory(double gamma0, double g, PropagationPath path, std::vector<double> times,
                       std::vector<TwoQubitState> states, std::vector<SampleScalars> scalars)
    : gamma0_(gamma0),
      g_(g),
      path_(path),
      times_(std::move(times)),
      states_(std::move(states)),
      scalars_(std::move(scalars)) {
  if (times_.empty() || times_.size() != states_.size() ||
      (!scalars_.empty() && scalars_.size() != times_.size())) {
    throw std::invalid_argument("trajectory: times, states and scalars must align");
  }
  if (times_.front() != 0.0) throw std::invalid_argument("trajectory must start at t = 0");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw std::invalid_argument("trajectory times must be strictly increasing");
    }
  }
}

}  // namespace dicke

#pragma once

#include "dicke/qstate.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dicke {

class DecayParams;

struct SampleScalars {
  double concurrence = 0.0;
  double m = 0.0;
  double n = 0.0;
  double linear_entropy = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
};

SampleScalars compute_scalars(const TwoQubitState& rho);

enum class PropagationPath { Analytic, Numeric };
std::string to_string(PropagationPath path);

/// Time-sampled states with derived scalars. times[0] == 0 and times are
/// strictly increasing; all three sequences have equal length.
class Trajectory {
 public:
  Trajectory(double gamma0, double g, PropagationPath path, std::vector<double> times,
             std::vector<TwoQubitState> states, std::vector<SampleScalars> scalars);

  double gamma0() const { return gamma0_; }
  double g() const { return g_; }
  PropagationPath path() const { return path_; }
  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<TwoQubitState>& states() const { return states_; }
  /// Empty when scalars were not requested.
  const std::vector<SampleScalars>& scalars() const { return scalars_; }
  bool has_scalars() const { return !scalars_.empty(); }

 private:
  double gamma0_;
  double g_;
  PropagationPath path_;
  std::vector<double> times_;
  std::vector<TwoQubitState> states_;
  std::vector<SampleScalars> scalars_;
};

}  // namespace dicke

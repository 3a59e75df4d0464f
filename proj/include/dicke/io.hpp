// State files, trajectory CSV/JSON export and report serialization.

#pragma once

#include "dicke/dynamics.hpp"
#include "dicke/entanglement_dynamics.hpp"
#include "dicke/nonlocality.hpp"
#include "dicke/qstate.hpp"
#include "dicke/trajectory.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dicke::io {

/// Malformed or unreadable input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Either pure-state angles or an explicit (not yet validated) matrix.
using StateSpec = std::variant<PureStateAngles, Matrix4c>;

/// {"angles": {"phi", "psi", "theta", "xi"}} or {"matrix": [[{"re", "im"} x4] x4]}.
StateSpec parse_state_json(const nlohmann::json& j);

/// Reads a state file, or parses `source` directly when it starts with '{'.
StateSpec load_state(const std::string& source);

/// Validates an explicit matrix; throws InvalidState.
TwoQubitState to_state(const StateSpec& spec, const Tolerances& tol = {});

nlohmann::json matrix_to_json(const Matrix4c& m);
nlohmann::json state_spec_to_json(const StateSpec& spec);

/// 17 significant digits, '.' decimal point, C locale.
std::string format_double(double v);

struct CsvOptions {
  /// Report raw times instead of gamma0 * t.
  bool absolute_time = false;
  /// Emitted as '# ' comment lines before the header.
  std::vector<std::string> metadata;
  /// Extra columns appended after the fixed schema, one value per sample.
  std::vector<std::pair<std::string, std::vector<double>>> extra_columns;
};

/// Header: t, rho11_re, rho11_im, ..., rho44_im, C, m, n, S_L, trace_err, min_eig.
std::vector<std::string> trajectory_csv_header();
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory, const CsvOptions& options);

nlohmann::json trajectory_to_json(const Trajectory& trajectory, bool absolute_time);

/// Times are multiplied by time_scale (gamma0 for dimensionless output, 1 for raw).
nlohmann::json report_to_json(const ExtremumReport& report, double time_scale);
nlohmann::json times_to_json(const NonlocalityTimes& times, double time_scale);

/// Generic numeric table with a header row.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& metadata = {});

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace dicke::io

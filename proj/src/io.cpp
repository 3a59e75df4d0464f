#include "dicke/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dicke::io {

namespace {

double number_field(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string("state file: missing field '") + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_number()) throw InputError(std::string("state file: field '") + key + "' is not a number");
  return v.get<double>();
}

nlohmann::json optional_number(const std::optional<double>& v, double scale = 1.0) {
  return v ? nlohmann::json(*v * scale) : nlohmann::json(nullptr);
}

}  // namespace

StateSpec parse_state_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("state file: top level must be a JSON object");
  const bool has_angles = j.contains("angles");
  const bool has_matrix = j.contains("matrix");
  if (has_angles == has_matrix) {
    throw InputError("state file: exactly one of 'angles' or 'matrix' must be given");
  }
  if (has_angles) {
    const auto& a = j.at("angles");
    try {
      return PureStateAngles(number_field(a, "phi"), number_field(a, "psi"),
                             number_field(a, "theta"), number_field(a, "xi"));
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("state file: ") + e.what());
    }
  }
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 4) throw InputError("state file: 'matrix' must have 4 rows");
  Matrix4c m;
  for (int r = 0; r < 4; ++r) {
    const auto& row = rows.at(r);
    if (!row.is_array() || row.size() != 4) {
      throw InputError("state file: every matrix row must have 4 entries");
    }
    for (int c = 0; c < 4; ++c) {
      m(r, c) = Complex{number_field(row.at(c), "re"), number_field(row.at(c), "im")};
    }
  }
  return m;
}

StateSpec load_state(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && source[first] == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot open state file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("state file is not valid JSON: ") + e.what());
  }
  return parse_state_json(j);
}

TwoQubitState to_state(const StateSpec& spec, const Tolerances& tol) {
  if (const auto* a = std::get_if<PureStateAngles>(&spec)) return make_pure(*a);
  return TwoQubitState::from_matrix(std::get<Matrix4c>(spec), tol);
}

nlohmann::json matrix_to_json(const Matrix4c& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json state_spec_to_json(const StateSpec& spec) {
  if (const auto* a = std::get_if<PureStateAngles>(&spec)) {
    return {{"angles", {{"phi", a->phi()}, {"psi", a->psi()}, {"theta", a->theta()}, {"xi", a->xi()}}}};
  }
  return {{"matrix", matrix_to_json(std::get<Matrix4c>(spec))}};
}

std::string format_double(double v) {
  char buf[40];
  if (v == 0.0) v = 0.0;  // no "-0" in output
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> trajectory_csv_header() {
  std::vector<std::string> h{"t"};
  for (int r = 1; r <= 4; ++r) {
    for (int c = 1; c <= 4; ++c) {
      const std::string base = "rho" + std::to_string(r) + std::to_string(c);
      h.push_back(base + "_re");
      h.push_back(base + "_im");
    }
  }
  for (const char* name : {"C", "m", "n", "S_L", "trace_err", "min_eig"}) h.emplace_back(name);
  return h;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const CsvOptions& options) {
  for (const auto& line : options.metadata) os << "# " << line << '\n';
  auto header = trajectory_csv_header();
  for (const auto& [name, values] : options.extra_columns) {
    if (values.size() != traj.size()) {
      throw std::invalid_argument("extra CSV column '" + name + "' has the wrong length");
    }
    header.push_back(name);
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';

  const double scale = options.absolute_time ? 1.0 : traj.gamma0();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Matrix4c& m = traj.states()[i].matrix();
    const SampleScalars s = traj.has_scalars() ? traj.scalars()[i] : compute_scalars(traj.states()[i]);
    os << format_double(traj.times()[i] * scale);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        os << ',' << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    for (double v : {s.concurrence, s.m, s.n, s.linear_entropy, s.trace_error, s.min_eigenvalue}) {
      os << ',' << format_double(v);
    }
    for (const auto& col : options.extra_columns) os << ',' << format_double(col.second[i]);
    os << '\n';
  }
}

nlohmann::json trajectory_to_json(const Trajectory& traj, bool absolute_time) {
  const double scale = absolute_time ? 1.0 : traj.gamma0();
  nlohmann::json times = nlohmann::json::array();
  nlohmann::json states = nlohmann::json::array();
  nlohmann::json scalars = nlohmann::json::array();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    times.push_back(traj.times()[i] * scale);
    states.push_back(matrix_to_json(traj.states()[i].matrix()));
    const SampleScalars s = traj.has_scalars() ? traj.scalars()[i] : compute_scalars(traj.states()[i]);
    scalars.push_back({{"C", s.concurrence},
                       {"m", s.m},
                       {"n", s.n},
                       {"S_L", s.linear_entropy},
                       {"trace_err", s.trace_error},
                       {"min_eig", s.min_eigenvalue}});
  }
  return {{"params", {{"gamma0", traj.gamma0()}, {"g", traj.g()}}},
          {"path", to_string(traj.path())},
          {"time_unit", absolute_time ? "absolute" : "1/gamma0"},
          {"times", times},
          {"states", states},
          {"scalars", scalars}};
}

nlohmann::json report_to_json(const ExtremumReport& r, double time_scale) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& p : r.numeric_check) {
    checks.push_back({{"kind", p.kind == search::ExtremumKind::Minimum ? "min" : "max"},
                      {"t", p.t * time_scale},
                      {"value", p.value}});
  }
  return {{"case_tag", to_string(r.case_tag)},
          {"t_min", optional_number(r.t_min, time_scale)},
          {"t_max", optional_number(r.t_max, time_scale)},
          {"c_min", optional_number(r.c_min)},
          {"c_max", optional_number(r.c_max)},
          {"monotone", r.monotone},
          {"c_initial", r.c_initial},
          {"exceeds_initial",
           r.exceeds_initial ? nlohmann::json(*r.exceeds_initial) : nlohmann::json(nullptr)},
          {"numeric_check", checks},
          {"deviation", optional_number(r.deviation)},
          {"numeric_fallback", r.numeric_fallback},
          {"consistent", r.consistent()},
          {"notes", r.notes}};
}

nlohmann::json times_to_json(const NonlocalityTimes& t, double time_scale) {
  return {{"t1", t.t1 * time_scale},
          {"t2", t.t2 * time_scale},
          {"t_n", t.t_n * time_scale},
          {"flags",
           {{"initially_local", t.initially_local},
            {"multiple_crossings", t.multiple_crossings},
            {"t1_dominates", t.t1_dominates},
            {"locality_verified", t.locality_verified}}},
          {"verification_horizon", t.verification_horizon * time_scale},
          {"notes", t.notes}};
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows,
               const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) os << "# " << line << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dicke::io

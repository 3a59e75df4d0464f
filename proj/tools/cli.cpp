#include "cli.hpp"

#include "dicke/chsh.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/entanglement_dynamics.hpp"
#include "dicke/io.hpp"
#include "dicke/nonlocality.hpp"
#include "dicke/validation.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

namespace dicke::cli {

namespace {

struct Config {
  std::string command;
  std::string state_source;
  double phi = 0.0;
  double psi = 0.0;
  double theta = 0.0;
  double xi = 0.0;
  double gamma0 = 1.0;
  std::vector<double> g{0.5};
  double t_end = 10.0;
  std::size_t samples = 1001;
  std::string format;
  std::string out_path;
  std::uint64_t seed = ValidationOptions{}.seed;
  bool dual_path = false;
  bool absolute_time = false;
};

// Failure with a specific exit code; the message goes to the log.
struct CliFailure {
  int code;
  std::string message;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("dicke", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("DICKE_LOG")) {
    logger->set_level(spdlog::level::from_str(env));
  }
  return logger;
}

io::StateSpec resolve_state(const Config& cfg) {
  if (!cfg.state_source.empty()) {
    try {
      return io::load_state(cfg.state_source);
    } catch (const io::InputError& e) {
      throw CliFailure{kBadInput, e.what()};
    }
  }
  try {
    return PureStateAngles(cfg.phi, cfg.psi, cfg.theta, cfg.xi);
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kBadInput, e.what()};
  }
}

TwoQubitState validated_state(const io::StateSpec& spec) {
  try {
    return io::to_state(spec);
  } catch (const InvalidState& e) {
    throw CliFailure{kBadInput, e.what()};
  }
}

DecayParams make_params(const Config& cfg, double g) {
  try {
    return DecayParams(cfg.gamma0, g);
  } catch (const DomainError& e) {
    throw CliFailure{kDomainError, e.what()};
  }
}

void check_common(const Config& cfg) {
  if (!(cfg.t_end > 0.0)) throw CliFailure{kBadInput, "--t-end must be positive"};
  if (cfg.samples < 2) throw CliFailure{kBadInput, "--samples must be at least 2"};
  if (cfg.g.empty()) throw CliFailure{kBadInput, "--g needs at least one value"};
  for (double g : cfg.g) make_params(cfg, g);
}

double absolute_t_end(const Config& cfg) {
  return cfg.absolute_time ? cfg.t_end : cfg.t_end / cfg.gamma0;
}

// Scale applied to library (absolute) times on output.
double time_scale(const Config& cfg) { return cfg.absolute_time ? 1.0 : cfg.gamma0; }

nlohmann::json config_json(const Config& cfg, const io::StateSpec& spec) {
  return {{"command", cfg.command},
          {"state", io::state_spec_to_json(spec)},
          {"gamma0", cfg.gamma0},
          {"g", cfg.g},
          {"t_end", cfg.t_end},
          {"samples", cfg.samples},
          {"format", cfg.format},
          {"seed", cfg.seed},
          {"validate", cfg.dual_path},
          {"absolute_time", cfg.absolute_time}};
}

nlohmann::json meta_json(const Config& cfg, const io::StateSpec& spec) {
  return {{"version", kVersion},
          {"command", cfg.command},
          {"config_hash", io::fnv1a_hex(config_json(cfg, spec).dump())},
          {"time_unit", cfg.absolute_time ? "absolute" : "1/gamma0"}};
}

std::vector<std::string> meta_lines(const nlohmann::json& meta) {
  std::vector<std::string> lines;
  lines.push_back(std::string("dicke ") + meta.at("version").get<std::string>());
  for (const auto& [key, value] : meta.items()) {
    if (key == "version") continue;
    lines.push_back(key + "=" + (value.is_string() ? value.get<std::string>() : value.dump()));
  }
  return lines;
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw CliFailure{kBadInput, "cannot write '" + cfg.out_path + "'"};
  file << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// Per-sample max |analytic - RK4| with the RK4 step landing on every sample time.
std::vector<double> dual_path_deviation(const TwoQubitState& rho0, const DecayParams& p,
                                        const Trajectory& analytic) {
  const std::size_t intervals = analytic.size() - 1;
  const double t_end = analytic.times().back();
  const std::size_t per = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(t_end / intervals / (kDefaultStep / p.gamma0()) - 1e-9)));
  NumericOptions options;
  options.record_every = per;
  options.compute_scalars = false;
  const Trajectory numeric = evolve_numeric(rho0, p, t_end, per * intervals, options);
  std::vector<double> dev(analytic.size());
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    dev[i] = (analytic.states()[i].matrix() - numeric.states()[i].matrix()).cwiseAbs().maxCoeff();
  }
  return dev;
}

int cmd_evolve(const Config& cfg, std::ostream& out, spdlog::logger& log) {
  check_common(cfg);
  if (cfg.g.size() != 1) throw CliFailure{kBadInput, "evolve takes a single --g value"};
  const io::StateSpec spec = resolve_state(cfg);
  const TwoQubitState rho0 = validated_state(spec);
  const DecayParams params = make_params(cfg, cfg.g.front());
  const Trajectory traj = evolve(rho0, params, absolute_t_end(cfg), cfg.samples);
  log.info("evolve: {} samples via {} path", traj.size(), to_string(traj.path()));

  nlohmann::json meta = meta_json(cfg, spec);
  meta["path"] = to_string(traj.path());
  meta["state_class"] = to_string(classify(rho0));
  std::vector<double> deviation;
  int code = kOk;
  if (cfg.dual_path) {
    if (traj.path() == PropagationPath::Analytic) {
      deviation = dual_path_deviation(rho0, params, traj);
      const double worst = *std::max_element(deviation.begin(), deviation.end());
      meta["validate_max_dev"] = worst;
      if (worst > kCrossCheckTolerance) {
        log.error("analytic and RK4 paths differ by {}", worst);
        code = kSuiteFailure;
      }
    } else {
      log.warn("--validate needs a state with zero first row/column; RK4 output only");
    }
  }

  std::ostringstream text;
  if (cfg.format == "json") {
    nlohmann::json j = io::trajectory_to_json(traj, cfg.absolute_time);
    j["meta"] = meta;
    if (!deviation.empty()) j["numeric_dev"] = deviation;
    text << json_text(j);
  } else {
    io::CsvOptions options;
    options.absolute_time = cfg.absolute_time;
    options.metadata = meta_lines(meta);
    if (!deviation.empty()) options.extra_columns.emplace_back("numeric_dev", deviation);
    io::write_trajectory_csv(text, traj, options);
  }
  emit(cfg, out, text.str());
  return code;
}

int cmd_curves(const Config& cfg, std::ostream& out, spdlog::logger& log) {
  check_common(cfg);
  const io::StateSpec spec = resolve_state(cfg);
  const TwoQubitState rho0 = validated_state(spec);
  const double scale = time_scale(cfg);

  nlohmann::json meta = meta_json(cfg, spec);
  std::vector<std::vector<double>> rows;
  nlohmann::json curves = nlohmann::json::array();
  for (double g : cfg.g) {
    const Trajectory traj = evolve(rho0, make_params(cfg, g), absolute_t_end(cfg), cfg.samples);
    meta["path"] = to_string(traj.path());
    nlohmann::json c = {{"g", g}};
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const SampleScalars& s = traj.scalars()[i];
      const double z = 1.0 - 2.0 * traj.states()[i](basis::k00, basis::k00).real();
      const std::vector<double> row{g, traj.times()[i] * scale, s.concurrence, s.m, s.n,
                                    s.linear_entropy, z * z};
      rows.push_back(row);
      c["t"].push_back(row[1]);
      c["C"].push_back(s.concurrence);
      c["m"].push_back(s.m);
      c["n"].push_back(s.n);
      c["S_L"].push_back(s.linear_entropy);
      c["one_minus_2rho44_sq"].push_back(z * z);
    }
    curves.push_back(c);
  }
  log.info("curves: {} rows", rows.size());
  std::ostringstream text;
  if (cfg.format == "json") {
    text << json_text({{"meta", meta}, {"curves", curves}});
  } else {
    io::write_csv(text, {"g", "t", "C", "m", "n", "S_L", "one_minus_2rho44_sq"}, rows,
                  meta_lines(meta));
  }
  emit(cfg, out, text.str());
  return kOk;
}

int cmd_extrema(const Config& cfg, std::ostream& out, spdlog::logger& log) {
  check_common(cfg);
  if (cfg.format == "csv") throw CliFailure{kBadInput, "extrema reports are written as JSON"};
  const io::StateSpec spec = resolve_state(cfg);
  const TwoQubitState rho0 = validated_state(spec);
  const auto* angles = std::get_if<PureStateAngles>(&spec);
  if (!angles && !is_single_excitation(classify(rho0))) {
    throw CliFailure{kBadInput, "extrema needs a state with zero first row and column"};
  }
  if (!angles) log.warn("explicit matrix input: using the numeric extremum search");

  nlohmann::json reports = nlohmann::json::array();
  bool consistent = true;
  for (double g : cfg.g) {
    const DecayParams params = make_params(cfg, g);
    const ExtremumReport r =
        angles ? extrema_for_pure(*angles, params)
               : extrema_numeric(rho0, params, cfg.absolute_time ? cfg.t_end : 0.0);
    consistent = consistent && r.consistent();
    nlohmann::json j = io::report_to_json(r, time_scale(cfg));
    j["g"] = g;
    reports.push_back(j);
  }
  if (!consistent) log.error("closed form and numeric search disagree");
  emit(cfg, out, json_text({{"meta", meta_json(cfg, spec)}, {"reports", reports}}));
  return consistent ? kOk : kSuiteFailure;
}

int cmd_tn(const Config& cfg, std::ostream& out, spdlog::logger& log) {
  check_common(cfg);
  if (cfg.format == "csv") throw CliFailure{kBadInput, "tn reports are written as JSON"};
  const io::StateSpec spec = resolve_state(cfg);
  const TwoQubitState rho0 = validated_state(spec);
  if (classify(rho0) != StateClass::Class22) {
    throw CliFailure{kBadInput, "tn needs a state with only rho_22, rho_33, rho_23, rho_44 nonzero"};
  }
  nlohmann::json results = nlohmann::json::array();
  for (double g : cfg.g) {
    const NonlocalityTimes t = nonlocality_times(rho0, make_params(cfg, g));
    if (t.initially_local) log.warn("initial state is already local");
    nlohmann::json j = io::times_to_json(t, time_scale(cfg));
    j["g"] = g;
    results.push_back(j);
  }
  emit(cfg, out, json_text({{"meta", meta_json(cfg, spec)}, {"results", results}}));
  return kOk;
}

int cmd_validate(const Config& cfg, std::ostream& out, spdlog::logger& log) {
  ValidationOptions options;
  options.seed = cfg.seed;
  io::StateSpec spec = PureStateAngles(0.0, 0.0, 0.0, 0.0);
  if (!cfg.state_source.empty()) {
    spec = resolve_state(cfg);
    options.input_state = std::holds_alternative<Matrix4c>(spec)
                              ? std::get<Matrix4c>(spec)
                              : make_pure(std::get<PureStateAngles>(spec)).matrix();
  }
  const ValidationReport report = run_validation(options);
  for (const auto& s : report.suites) {
    log.info("{}: {} (metric {}, threshold {})", s.name, s.passed ? "pass" : "FAIL", s.metric,
             s.threshold);
  }
  nlohmann::json j = report.to_json();
  j["meta"] = meta_json(cfg, spec);
  emit(cfg, out, json_text(j));
  return report.passed() ? kOk : kSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Config cfg;
  CLI::App app{"Two-atom spontaneous emission: entanglement and CHSH nonlocality"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--state", cfg.state_source, "State file or inline JSON");
    sub->add_option("--phi", cfg.phi, "Pure-state angle phi in [0, pi/2]");
    sub->add_option("--psi", cfg.psi, "Pure-state angle psi in [0, pi/2]");
    sub->add_option("--theta", cfg.theta, "Relative phase theta in [0, 2 pi)");
    sub->add_option("--xi", cfg.xi, "Ground-state phase xi in [0, 2 pi)");
    sub->add_option("--gamma0", cfg.gamma0, "Single-atom emission rate");
    sub->add_option("--g", cfg.g, "Photon-exchange ratio(s) gamma/gamma0 in [0, 1)");
    sub->add_option("--t-end", cfg.t_end, "End time (gamma0 t unless --absolute-time)");
    sub->add_option("--samples", cfg.samples, "Number of output samples");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "Output path (stdout if omitted)");
    sub->add_option("--seed", cfg.seed, "Seed for randomized suites");
    sub->add_flag("--validate", cfg.dual_path, "Cross-check the analytic path against RK4");
    sub->add_flag("--absolute-time", cfg.absolute_time, "Times in raw units instead of gamma0 t");
  };
  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(const Config&, std::ostream&, spdlog::logger&);
    const char* default_format;
  };
  const Sub subs[] = {
      {"evolve", "Write the density-matrix trajectory", cmd_evolve, "csv"},
      {"curves", "Write C, m, n, S_L curves (optionally swept over g)", cmd_curves, "csv"},
      {"extrema", "Critical times and values of the concurrence", cmd_extrema, "json"},
      {"tn", "Times after which CHSH violation is lost", cmd_tn, "json"},
      {"validate", "Run the self-check suites", cmd_validate, "json"},
  };
  for (const auto& s : subs) add_common(app.add_subcommand(s.name, s.help));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out, msg_err;
    const int rc = app.exit(e, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return rc == 0 ? kOk : kBadInput;
  }

  for (const auto& s : subs) {
    if (!app.got_subcommand(s.name)) continue;
    cfg.command = s.name;
    if (cfg.format.empty()) cfg.format = s.default_format;
    try {
      return s.fn(cfg, out, *log);
    } catch (const CliFailure& f) {
      log->error("{}", f.message);
      return f.code;
    } catch (const DomainError& e) {
      log->error("{}", e.what());
      return kDomainError;
    } catch (const std::exception& e) {
      log->error("{}", e.what());
      return kBadInput;
    }
  }
  return kBadInput;
}

}  // namespace dicke::cli

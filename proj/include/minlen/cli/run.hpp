#pragma once

// Command-line front end. Exit codes: 0 every requested check passed, 1 a check failed,
// 2 usage error. report.json is written to the output directory in every case where the
// directory is known.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "minlen/dirac/eigensolve.hpp"
#include "minlen/dirac/spectrum.hpp"
#include "minlen/dirac/wavefunction.hpp"
#include "minlen/io/serialize.hpp"
#include "minlen/symbolic/verify.hpp"
#include "minlen/uncertainty/state.hpp"

namespace minlen::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string command;
  std::string format = "json";
  std::string out_dir = ".";
  std::optional<double> tol;
  int dims = 3;
  std::string algebra_case = "full";
  double beta_tilde = 0.5;
  double omega_tilde = 0.1;
  std::optional<int> n_max;
  int n = 0;
  int tau = 1;
  std::optional<int> frame_level;
  std::size_t grid_size = 1025;
  int refinements = 3;
  bool diagnostic = false;
  bool oracle = false;
  std::vector<double> beta_values{1e-3, 1e-4, 1e-5};
};

struct Check {
  std::string name;
  bool pass = true;
  std::optional<double> value;
  std::optional<double> threshold;
};

struct Outcome {
  std::vector<Check> checks;
  std::vector<std::string> files;
  std::vector<std::string> notes;

  void check(std::string name, bool pass, std::optional<double> value = {}, std::optional<double> threshold = {}) {
    checks.push_back({std::move(name), pass, value, threshold});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline void write_file(const Config& cfg, Outcome& out, const std::string& name, const std::string& content) {
  const auto path = std::filesystem::path(cfg.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  out.files.push_back(name);
}

inline void emit(const Config& cfg, Outcome& out, const std::string& stem, const io::json& j,
                 const std::string& csv) {
  if (cfg.format == "csv")
    write_file(cfg, out, stem + ".csv", csv);
  else
    write_file(cfg, out, stem + ".json", io::dump(j));
}

inline io::json config_json(const Config& c) {
  io::json j;
  j["command"] = c.command;
  j["format"] = c.format;
  if (c.command == "verify-algebra") {
    j["dims"] = c.dims;
    j["case"] = c.algebra_case;
    return j;
  }
  if (c.command != "limits") j["beta_tilde"] = c.beta_tilde;
  j["omega_tilde"] = c.omega_tilde;
  if (c.n_max) j["n_max"] = *c.n_max;
  if (c.command == "wavefunction") {
    j["n"] = c.n;
    j["tau"] = c.tau;
    if (c.frame_level) j["frame_level"] = *c.frame_level;
  }
  if (c.command == "wavefunction" || c.command == "uncertainty") j["grid_size"] = c.grid_size;
  if (c.command == "spectrum") {
    j["diagnostic"] = c.diagnostic;
    j["oracle"] = c.oracle;
    if (c.oracle) j["refinements"] = c.refinements;
  }
  if (c.command == "limits") j["beta_values"] = c.beta_values;
  if (c.tol) j["tol"] = *c.tol;
  return j;
}

inline void write_report(const Config& cfg, const Outcome& out, const std::string& status,
                         const std::string& message) {
  io::json j;
  j["command"] = cfg.command;
  j["status"] = status;
  if (!message.empty()) j["message"] = message;
  j["config"] = config_json(cfg);
  j["checks"] = io::json::array();
  for (const auto& c : out.checks) {
    io::json r;
    r["name"] = c.name;
    r["pass"] = c.pass;
    if (c.value) r["value"] = *c.value;
    if (c.threshold) r["threshold"] = *c.threshold;
    j["checks"].push_back(r);
  }
  j["notes"] = out.notes;
  j["files"] = out.files;
  std::ofstream f(std::filesystem::path(cfg.out_dir) / "report.json", std::ios::binary);
  if (f) f << io::dump(j);
}

inline dirac::DOParams do_params(const Config& c) {
  const auto mode = c.diagnostic ? dirac::Mode::diagnostic : dirac::Mode::physical;
  if (!(c.beta_tilde >= 0.0) || !(c.omega_tilde > 0.0))
    throw usage_error("--beta-tilde must be >= 0 and --omega-tilde > 0");
  dirac::DOParams p(c.beta_tilde, c.omega_tilde, mode);
  if (!p.physical() && !c.diagnostic)
    throw usage_error("--beta-tilde >= 1 is unphysical; pass --diagnostic to evaluate the formulas anyway");
  return p;
}

// ---------------------------------------------------------------------------------------
// Commands

inline void verify_algebra(const Config& c, Outcome& out) {
  std::vector<sym::VerificationReport> reports;
  if (c.algebra_case == "snyder") {
    if (c.dims != 3) throw usage_error("the Snyder reduction is defined for --dims 3");
    reports.push_back(sym::verify_snyder());
  } else if (c.algebra_case == "kempf") {
    reports.push_back(sym::verify_kempf(c.dims));
  } else {
    const auto params =
        c.algebra_case == "undeformed" ? sym::SymbolicParams::undeformed() : sym::SymbolicParams::symbolic();
    reports.push_back(sym::verify_algebra(params, c.dims));
    reports.back().suite = "algebra";
    reports.push_back(sym::verify_poincare(params, c.dims));
    reports.back().suite = "poincare";
    reports.push_back(sym::verify_transformations(params, c.dims));
    reports.back().suite = "transformations";
  }
  io::json j;
  j["case"] = c.algebra_case;
  j["dims"] = c.dims;
  j["suites"] = io::json::array();
  std::string csv = "suite,identity_id,pass,residual_term_count,latex_tag\n";
  for (const auto& r : reports) {
    io::json s;
    s["suite"] = r.suite;
    s["passed"] = r.passed();
    s["identities"] = sym::to_json(r);
    j["suites"].push_back(s);
    for (const auto& id : r.identities) {
      csv += r.suite + "," + id.identity_id + "," + (id.pass ? "true" : "false") + "," +
             std::to_string(id.residual_term_count) + "," + io::csv_field(id.latex_tag) + "\n";
      out.check(r.suite + "/" + id.identity_id, id.pass, double(id.residual_term_count), 0.0);
    }
  }
  emit(c, out, "verification", j, csv);
}

inline void spectrum(const Config& c, Outcome& out) {
  const auto params = do_params(c);
  const int n_max = c.n_max.value_or(5);
  const auto table = dirac::spectrum_table(params, n_max);
  auto j = io::to_json(table, params);
  if (!table.physical) {
    j["label"] = "unphysical";
    out.notes.push_back("diagnostic mode: beta~ >= 1, every level is unphysical");
    out.check("monotonicity_violation_flagged", table.monotonicity_violation() || params.beta_tilde == 1.0);
  } else {
    out.check("monotonic", table.monotonic);
    out.check("bounded", table.bounded);
  }
  double worst = 0.0;
  for (const auto& l : table.levels)
    worst = std::max(worst, std::abs(l.e_n - (l.p0_tilde * l.p0_tilde - 1.0)) / std::max(1.0, std::abs(l.e_n)));
  out.check("self_consistency", worst <= 1e-12, worst, 1e-12);

  if (c.oracle) {
    if (!table.physical) throw usage_error("--oracle needs the physical mode");
    const double tol = c.tol.value_or(1e-5);
    dirac::EigenOptions opt;
    opt.refinements = c.refinements;
    io::json rows = io::json::array();
    for (int n = 0; n <= n_max; ++n) {
      const auto level = dirac::spectrum_level(params, {n, 1});
      const auto r = dirac::eigensolve_factorized(params, level.p0_tilde, std::size_t(n) + 1, opt);
      const double got = r.eigenvalues[n];
      const double err = n == 0 ? std::abs(got) : std::abs(got - level.e_n) / level.e_n;
      out.check("oracle_n" + std::to_string(n), err <= tol, err, tol);
      io::json row;
      row["n"] = n;
      row["e_n"] = level.e_n;
      row["eigenvalue"] = got;
      row["error"] = err;
      row["observed_order"] = r.observed_order[n];
      row["extrapolated_order"] = r.extrapolated_order[n];
      row["grid_sizes"] = r.grid_sizes;
      rows.push_back(row);
    }
    j["oracle"] = rows;
  }
  emit(c, out, "spectrum", j, io::spectrum_csv(table));
}

inline void wavefunction(const Config& c, Outcome& out) {
  const auto params = do_params(c);
  if (!params.physical()) throw usage_error("no wavefunctions are produced for beta~ >= 1");
  const dirac::QuantumNumber qn{c.n, c.tau};
  qn.validate();
  dirac::GridSpec spec;
  spec.size = c.grid_size;
  spec.frame_level = c.frame_level;
  const auto g = dirac::wavefunction(params, qn, spec);
  const double tol = c.tol.value_or(1e-6);
  out.check("residual_plus", g.meta.residual_plus <= tol, g.meta.residual_plus, tol);
  out.check("residual_minus", g.meta.residual_minus <= tol, g.meta.residual_minus, tol);
  const double norm_err = std::abs(g.norm_squared() - 1.0);
  out.check("normalization", norm_err <= 1e-8, norm_err, 1e-8);
  if (c.n == 0) out.check("node_count", g.meta.node_count == 0, g.meta.node_count);
  else out.check("node_count", g.meta.node_count == c.n, g.meta.node_count, c.n);
  for (const auto& w : g.meta.warnings) out.notes.push_back(w);
  const std::string stem =
      "wavefunction_n" + std::to_string(c.n) + "_tau" + (c.tau > 0 ? std::string("p") : std::string("m"));
  emit(c, out, stem, io::to_json(g), io::wavefunction_csv(g));
}

inline void uncertainty(const Config& c, Outcome& out) {
  const auto params = do_params(c);
  if (!params.physical()) throw usage_error("no wavefunctions are produced for beta~ >= 1");
  const int n_max = c.n_max.value_or(5);
  const double tol = c.tol.value_or(1e-10);
  dirac::GridSpec spec;
  spec.size = c.grid_size;
  std::vector<io::UncertaintyRecord> rows;
  for (int tau : {1, -1})
    for (int n = tau == 1 ? 0 : 1; n <= n_max; ++n) {
      const auto g = dirac::wavefunction(params, {n, tau}, spec);
      io::UncertaintyRecord r;
      r.level = {n, tau};
      r.state = uncertainty::state_moments(g, params);
      r.bound = uncertainty::state_bound(r.state, params);
      // Ground states saturate the bound, so allow rounding-level shortfall.
      out.check("product_ge_bound_n" + std::to_string(n) + (tau > 0 ? "p" : "m"),
                r.slack() >= -tol * r.bound, r.slack(), -tol * r.bound);
      rows.push_back(r);
    }
  io::json j;
  j["beta_tilde"] = params.beta_tilde;
  j["omega_tilde"] = params.omega_tilde;
  j["records"] = io::json::array();
  for (const auto& r : rows) j["records"].push_back(io::to_json(r));
  emit(c, out, "uncertainty", j, io::uncertainty_csv(rows));
}

inline void limits(const Config& c, Outcome& out) {
  const int n_max = c.n_max.value_or(20);
  const double tol = c.tol.value_or(0.2);
  if (c.beta_values.empty()) throw usage_error("--beta-values needs at least one value");
  if (!(c.omega_tilde > 0.0)) throw usage_error("--omega-tilde must be positive");
  for (double b : c.beta_values)
    if (!(b > 0.0 && b < 1.0)) throw usage_error("--beta-values entries must lie in (0, 1)");
  io::json rows = io::json::array();
  std::string csv = "beta_tilde,max_error,ratio,expected_ratio\n";
  double previous = std::nan("");
  for (std::size_t k = 0; k < c.beta_values.size(); ++k) {
    const dirac::DOParams params(c.beta_values[k], c.omega_tilde);
    double err = 0.0;
    for (int n = 0; n <= n_max; ++n)
      err = std::max(err, std::abs(dirac::p0_allowed(params, {n, 1}) - std::sqrt(1.0 + 2.0 * c.omega_tilde * n)));
    const double ratio = k == 0 ? std::nan("") : previous / err;
    const double expected = k == 0 ? std::nan("") : c.beta_values[k - 1] / c.beta_values[k];
    if (k > 0)
      out.check("linear_ratio_" + std::to_string(k), std::abs(ratio / expected - 1.0) <= tol, ratio, expected);
    io::json row;
    row["beta_tilde"] = c.beta_values[k];
    row["max_error"] = err;
    row["ratio"] = ratio;
    row["expected_ratio"] = expected;
    rows.push_back(row);
    csv += io::format_double(c.beta_values[k]) + "," + io::format_double(err) + "," + io::format_double(ratio) +
           "," + io::format_double(expected) + "\n";
    previous = err;
  }
  io::json j;
  j["omega_tilde"] = c.omega_tilde;
  j["n_max"] = n_max;
  j["rows"] = rows;
  emit(c, out, "limits", j, csv);
}

}  // namespace detail

inline int run(int argc, char** argv, std::ostream& log = std::cerr) {
  Config cfg;
  CLI::App app{"Deformed-algebra verification and Dirac-oscillator toolkit", "minlen"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "Read options from a file of `key = value` lines (# comments)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::map<std::string, std::set<std::string>> scope;
  auto scoped = [&](CLI::Option* opt, std::set<std::string> commands) {
    scope[opt->get_name()] = std::move(commands);
    return opt;
  };
  const std::set<std::string> all{"verify-algebra", "spectrum", "wavefunction", "uncertainty", "limits"};
  const std::set<std::string> numeric{"spectrum", "wavefunction", "uncertainty", "limits"};
  const std::set<std::string> oscillator{"spectrum", "wavefunction", "uncertainty"};

  scoped(app.add_option("--format", cfg.format, "Data file format")->check(CLI::IsMember({"csv", "json"})), all);
  scoped(app.add_option("--out-dir", cfg.out_dir, "Directory for output files"), all);
  scoped(app.add_option("--tol", cfg.tol, "Tolerance of the command's numerical checks")
             ->check(CLI::PositiveNumber),
         numeric);
  scoped(app.add_option("--dims", cfg.dims, "Spatial dimension D")->check(CLI::Range(1, 3)), {"verify-algebra"});
  scoped(app.add_option("--case", cfg.algebra_case, "Parameter case")
             ->check(CLI::IsMember({"full", "snyder", "kempf", "undeformed"})),
         {"verify-algebra"});
  scoped(app.add_option("--beta-tilde", cfg.beta_tilde, "beta m^2 c^2"), oscillator);
  scoped(app.add_option("--omega-tilde", cfg.omega_tilde, "hbar omega / (m c^2)"), numeric);
  scoped(app.add_option("--n-max", cfg.n_max, "Highest n")->check(CLI::NonNegativeNumber),
         {"spectrum", "uncertainty", "limits"});
  scoped(app.add_option("--n", cfg.n, "Level n"), {"wavefunction"});
  scoped(app.add_option("--tau", cfg.tau, "Branch tau = +1 or -1"), {"wavefunction"});
  scoped(app.add_option("--frame-level", cfg.frame_level, "Sample on the frame of this level"), {"wavefunction"});
  scoped(app.add_option("--grid-size", cfg.grid_size, "Interior grid nodes (odd, >= 65)"),
         {"wavefunction", "uncertainty"});
  scoped(app.add_option("--refinements", cfg.refinements, "Grid refinements of the eigen-oracle")
             ->check(CLI::Range(1, 8)),
         {"spectrum"});
  scoped(app.add_flag("--diagnostic", cfg.diagnostic, "Evaluate formulas for beta~ >= 1 and label them"),
         {"spectrum"});
  scoped(app.add_flag("--oracle", cfg.oracle, "Compare e_n with the discretised B+B- spectrum"), {"spectrum"});
  scoped(app.add_option("--beta-values", cfg.beta_values, "Comma-separated beta~ sequence")->delimiter(','),
         {"limits"});

  const std::map<std::string, std::string> about{
      {"verify-algebra", "Check the commutator identities exactly"},
      {"spectrum", "Tabulate p0~, e_n and E/mc^2 per level"},
      {"wavefunction", "Large and small components of one level"},
      {"uncertainty", "dX dP against the deformed bound per level"},
      {"limits", "Approach to the undeformed spectrum as beta~ -> 0"},
  };
  for (const auto& name : all) app.add_subcommand(name, about.at(name))->fallthrough();

  Outcome outcome;
  auto fail_usage = [&](const std::string& message) {
    log << "usage error: " << message << "\n";
    std::error_code ec;
    if (std::filesystem::create_directories(cfg.out_dir, ec), !ec || std::filesystem::is_directory(cfg.out_dir))
      detail::write_report(cfg, outcome, "usage_error", message);
    return kUsageError;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (auto subs = app.get_subcommands(); !subs.empty()) cfg.command = subs.front()->get_name();
    // Parsing stops at the first bad option, so recover the output directory by hand.
    for (int i = 1; i < argc; ++i) {
      const std::string a = argv[i];
      if (a == "--out-dir" && i + 1 < argc) cfg.out_dir = argv[i + 1];
      else if (a.rfind("--out-dir=", 0) == 0) cfg.out_dir = a.substr(10);
    }
    return fail_usage(e.what());
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    for (const auto& [name, commands] : scope)
      if (app.get_option(name)->count() > 0 && !commands.count(cfg.command))
        throw usage_error(name + " does not apply to " + cfg.command);
    if (cfg.grid_size < 65 || cfg.grid_size % 2 == 0)
      throw usage_error("--grid-size must be odd and at least 65");
    std::filesystem::create_directories(cfg.out_dir);

    if (cfg.command == "verify-algebra") detail::verify_algebra(cfg, outcome);
    else if (cfg.command == "spectrum") detail::spectrum(cfg, outcome);
    else if (cfg.command == "wavefunction") detail::wavefunction(cfg, outcome);
    else if (cfg.command == "uncertainty") detail::uncertainty(cfg, outcome);
    else detail::limits(cfg, outcome);
  } catch (const usage_error& e) {
    return fail_usage(e.what());
  } catch (const quantum_number_error& e) {
    return fail_usage(e.what());
  } catch (const acceptability_error& e) {
    return fail_usage(e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail_usage(e.what());
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    outcome.check("completed", false);
    detail::write_report(cfg, outcome, "fail", e.what());
    return kCheckFailed;
  }

  const bool ok = outcome.passed();
  detail::write_report(cfg, outcome, ok ? "pass" : "fail", "");
  for (const auto& c : outcome.checks)
    if (!c.pass) log << "check failed: " << c.name << "\n";
  return ok ? kPass : kCheckFailed;
}

}  // namespace minlen::cli

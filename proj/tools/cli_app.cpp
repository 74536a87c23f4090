#include "cli_app.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radbc/error_bounds.hpp"
#include "radbc/quadrature.hpp"
#include "radbc/rational_dtn.hpp"
#include "radbc/wave_sim.hpp"

namespace radbc::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kNumerical = 4;

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

// One tabular result; renders as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<json> rows;

  std::string render_csv() const {
    std::string text = csv_line(columns);
    for (const json& r : rows) {
      std::vector<std::string> cells;
      for (const auto& c : columns) {
        const json& v = r.at(c);
        if (v.is_null())
          cells.emplace_back("");
        else if (v.is_boolean())
          cells.emplace_back(v.get<bool>() ? "true" : "false");
        else if (v.is_string())
          cells.emplace_back(v.get<std::string>());
        else if (v.is_number_integer())
          cells.emplace_back(std::to_string(v.get<long>()));
        else
          cells.emplace_back(format17(v.get<double>()));
      }
      text += csv_line(cells);
    }
    return text;
  }

  std::string render(const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const json& r : rows) arr.push_back(r);
      return arr.dump(2) + "\n";
    }
    return render_csv();
  }
};

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", kind}, {"message", message}};
}

// --- config ingestion -------------------------------------------------------

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"k",       "n_bc",         "x_max",
                                                "dx",      "cfl",          "t_final",
                                                "pulse_center", "pulse_width", "reference_factor"};
  return keys;
}

// Parses the nine config fields. Schema problems (missing keys, wrong
// types, unknown keys) go to `problems`; `fields_ok` reports whether every
// field was actually read, i.e. whether invariant checks are meaningful.
ModeSimConfig config_from_json(const json& j, std::vector<std::string>& problems,
                               bool& fields_ok) {
  ModeSimConfig cfg;
  fields_ok = false;
  if (!j.is_object()) {
    problems.push_back("config must be a JSON object");
    return cfg;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const auto& k : config_keys()) known = known || k == it.key();
    if (!known) problems.push_back("unknown config key: " + it.key());
  }
  bool ok = true;
  const auto number = [&](const char* key, double& slot) {
    if (!j.contains(key)) {
      problems.push_back(std::string("missing config key: ") + key);
      ok = false;
      return;
    }
    if (!j[key].is_number()) {
      problems.push_back(std::string("config key must be numeric: ") + key);
      ok = false;
      return;
    }
    slot = j[key].get<double>();
  };
  number("k", cfg.k);
  number("x_max", cfg.x_max);
  number("dx", cfg.dx);
  number("cfl", cfg.cfl);
  number("t_final", cfg.t_final);
  number("pulse_center", cfg.pulse_center);
  number("pulse_width", cfg.pulse_width);
  number("reference_factor", cfg.reference_factor);
  if (!j.contains("n_bc")) {
    problems.push_back("missing config key: n_bc");
    ok = false;
  } else if (!j["n_bc"].is_number() ||
             j["n_bc"].get<double>() != static_cast<long>(j["n_bc"].get<double>())) {
    problems.push_back("config key must be an integer: n_bc");
    ok = false;
  } else {
    cfg.n_bc = static_cast<int>(j["n_bc"].get<double>());
  }
  fields_ok = ok;
  return cfg;
}

json config_to_json(const ModeSimConfig& c) {
  return json{{"k", c.k},
              {"n_bc", c.n_bc},
              {"x_max", c.x_max},
              {"dx", c.dx},
              {"cfl", c.cfl},
              {"t_final", c.t_final},
              {"pulse_center", c.pulse_center},
              {"pulse_width", c.pulse_width},
              {"reference_factor", c.reference_factor}};
}

json summary_json(const ReflectionReport& r) {
  return json{{"config", config_to_json(r.config)},
              {"peak_error", r.peak_error},
              {"scheme",
               {{"dt", r.dt},
                {"steps", r.steps},
                {"grid_points", r.grid_points},
                {"reference_points", r.reference_points},
                {"boundary", r.config.n_bc > 0 ? "product-" + std::to_string(r.config.n_bc)
                                               : "dirichlet"}}}};
}

int fail_validation(const std::vector<std::string>& problems, std::ostream& out) {
  json e = error_json("validation", "configuration rejected");
  e["violations"] = problems;
  out << e.dump(2) << "\n";
  return kValidation;
}

// Reads and fully validates a simulation config file. Returns nullopt after
// printing the machine-readable violation list.
std::optional<ModeSimConfig> load_config(const std::string& path, std::ostream& out, int& code) {
  std::ifstream f(path);
  if (!f) {
    out << error_json("usage", "cannot open config file: " + path).dump(2) << "\n";
    code = kUsage;
    return std::nullopt;
  }
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    code = fail_validation({std::string("config is not valid JSON: ") + e.what()}, out);
    return std::nullopt;
  }
  std::vector<std::string> problems;
  bool fields_ok = false;
  ModeSimConfig cfg = config_from_json(j, problems, fields_ok);
  if (fields_ok) {
    const auto inv = cfg.validate();
    problems.insert(problems.end(), inv.begin(), inv.end());
  }
  if (!problems.empty()) {
    code = fail_validation(problems, out);
    return std::nullopt;
  }
  return cfg;
}

// --- subcommand bodies ------------------------------------------------------

Table poles_table(int n) {
  const RationalDtn abc = poles_and_residues(n);
  Table t;
  t.columns = {"j", "theta", "pole_im", "residue"};
  for (int j = 1; j <= n; ++j)
    t.rows.push_back(json{{"j", j},
                          {"theta", abc.thetas[j - 1]},
                          {"pole_im", abc.poles[j - 1].imag()},
                          {"residue", abc.residues[j - 1]}});
  return t;
}

Table quad_table(const QuadratureReport& r) {
  Table t;
  t.columns = {"rule", "n", "t", "k_abs", "exact_re", "exact_im", "approx_re", "approx_im",
               "abs_error"};
  t.rows.push_back(json{{"rule", r.rule_name},
                        {"n", r.n_nodes},
                        {"t", r.t},
                        {"k_abs", r.k_abs},
                        {"exact_re", r.exact.real()},
                        {"exact_im", r.exact.imag()},
                        {"approx_re", r.approx.real()},
                        {"approx_im", r.approx.imag()},
                        {"abs_error", r.abs_error}});
  return t;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
  Table t;
  t.columns = {"k", "n_bc", "dx", "t_final", "peak_error", "status"};
  for (const auto& r : rows) {
    json row{{"k", r.k},       {"n_bc", r.n_bc},           {"dx", r.dx},
             {"t_final", r.t_final}, {"peak_error", r.peak_error}, {"status", r.status}};
    if (r.status != "ok") row["peak_error"] = nullptr;
    t.rows.push_back(row);
  }
  return t;
}

std::string timeseries_csv(const ReflectionReport& r) {
  std::string text = "t,error\n";
  for (std::size_t i = 0; i < r.times.size(); ++i)
    text += csv_line({format17(r.times[i]), format17(r.errors[i])});
  return text;
}

}  // namespace

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radiation boundary conditions for the wave equation: rational one-way "
               "approximations, branch-segment quadrature, error bounds, and a mode-wise "
               "reflection testbench"};
  app.set_version_flag("--version", "radbc 0.1.0");
  app.require_subcommand(1);

  std::string format = "csv", out_path;
  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Write output to this path instead of stdout");
  };

  // poles
  int n = 1;
  auto* poles = app.add_subcommand("poles", "Poles and residues of the order-n approximation");
  poles->add_option("--n", n, "Approximation order")->required()->check(CLI::Range(1, 1000));
  add_io(poles);

  // quad
  std::string g_name, rule = "polesum";
  double t = 0.0, k = 1.0, tol = 1e-12;
  auto* quad = app.add_subcommand("quad", "Branch-segment integral vs quadrature approximation");
  quad->add_option("--g", g_name, "Test function")
      ->required()
      ->check(CLI::IsMember(registered_mode_names()));
  quad->add_option("--n", n, "Nodes / approximation order")->required()->check(CLI::Range(1, 1000));
  quad->add_option("--t", t, "Time parameter")->check(CLI::Range(0.0, 100.0));
  quad->add_option("--k", k, "Tangential wavenumber magnitude")
      ->check(CLI::PositiveNumber);
  quad->add_option("--rule", rule, "Quadrature family")
      ->check(CLI::IsMember({"polesum", "gcu", "gl"}));
  quad->add_option("--tol", tol, "Oracle tolerance")->check(CLI::Range(1e-14, 1.0));
  add_io(quad);

  // bound
  std::string mode;
  double kmax = 0.0, m_direct = -1.0;
  int samples = 4096;
  bool have_k = false, have_kmax = false, have_m = false;
  auto* bound = app.add_subcommand("bound", "A-priori error bound evaluation");
  bound->add_option("--mode", mode, "permode or integrated")
      ->required()
      ->check(CLI::IsMember({"permode", "integrated"}));
  bound->add_option("--n", n, "Approximation order")->required()->check(CLI::Range(1, 1000));
  bound->add_option("--t", t, "Time parameter")->check(CLI::Range(0.0, 100.0));
  auto* optk = bound->add_option("--k", k, "Per-mode wavenumber (permode)");
  auto* optkmax = bound->add_option("--kmax", kmax, "Maximal wavenumber (integrated)")
                      ->check(CLI::PositiveNumber);
  auto* optm = bound->add_option("--M", m_direct, "Amplitude bound M supplied directly");
  bound->add_option("--g", g_name, "Estimate M from this test function")
      ->check(CLI::IsMember(registered_mode_names()));
  bound->add_option("--samples", samples, "Grid size for the M estimate")
      ->check(CLI::Range(64, 1 << 22));
  bound->add_option("--tol", tol, "Oracle tolerance for the measured error")
      ->check(CLI::Range(1e-14, 1.0));
  add_io(bound);

  // simulate / sweep
  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Run one reflection measurement");
  simulate->add_option("--config", config_path, "Simulation config JSON")->required();
  simulate->add_option("--out", out_path, "Prefix for <out>.csv and <out>.json");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a batch of reflection measurements");
  sweep_cmd->add_option("--config", config_path, "Sweep config JSON ({\"configs\": [...]})")
      ->required();
  sweep_cmd->add_option("--out", out_path, "Write the summary table to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  have_k = optk->count() > 0;
  have_kmax = optkmax->count() > 0;
  have_m = optm->count() > 0;

  try {
    if (poles->parsed()) {
      emit(poles_table(n).render(format), out_path, out);
      return kOk;
    }

    if (quad->parsed()) {
      const AnalyticMode g = analytic_mode(g_name);
      QuadratureReport report;
      if (rule == "polesum")
        report = quadrature_report(poles_and_residues(n), g, t, k, tol);
      else if (rule == "gcu")
        report = quadrature_report(gauss_chebyshev_u_rule(n), g, t, k, tol);
      else
        report = quadrature_report(gauss_legendre_folded_rule(n), g, t, k, tol);
      emit(quad_table(report).render(format), out_path, out);
      return kOk;
    }

    if (bound->parsed()) {
      if (!have_m && g_name.empty()) {
        err << "usage error: bound requires --M or --g\n";
        return kUsage;
      }
      Table tab;
      tab.columns = {"n", "t", "k", "M", "measured_error", "bound", "ratio", "holds"};
      json row;
      row["n"] = n;
      row["t"] = t;
      if (mode == "integrated") {
        if (!have_kmax) {
          err << "usage error: --mode integrated requires --kmax\n";
          return kUsage;
        }
        const double M =
            have_m ? m_direct : estimate_M(analytic_mode(g_name), kmax, samples);
        row["k"] = kmax;
        row["M"] = M;
        row["bound"] = integrated_bound(n, t, kmax, M);
        row["measured_error"] = nullptr;
        row["ratio"] = nullptr;
        row["holds"] = nullptr;
      } else {
        if (!have_k) {
          err << "usage error: --mode permode requires --k\n";
          return kUsage;
        }
        const double M = have_m ? m_direct : estimate_M(analytic_mode(g_name), k, samples);
        const double b = per_mode_bound(n, t, k, M);
        row["k"] = k;
        row["M"] = M;
        row["bound"] = b;
        if (!g_name.empty()) {
          const QuadratureReport report =
              quadrature_report(poles_and_residues(n), analytic_mode(g_name), t, k, tol);
          const BoundCheck check = bound_check(report, b);
          row["measured_error"] = report.abs_error;
          row["ratio"] = check.ratio;
          row["holds"] = check.holds;
        } else {
          row["measured_error"] = nullptr;
          row["ratio"] = nullptr;
          row["holds"] = nullptr;
        }
      }
      tab.rows.push_back(row);
      emit(tab.render(format), out_path, out);
      return kOk;
    }

    if (simulate->parsed()) {
      int code = kOk;
      const auto cfg = load_config(config_path, out, code);
      if (!cfg) return code;
      const ReflectionReport report = run_simulation(*cfg);
      const json summary = summary_json(report);
      out << summary.dump(2) << "\n";
      if (!out_path.empty()) {
        std::ofstream csv(out_path + ".csv");
        std::ofstream js(out_path + ".json");
        if (!csv || !js) throw std::runtime_error("cannot open output prefix: " + out_path);
        csv << timeseries_csv(report);
        js << summary.dump(2) << "\n";
      }
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      std::ifstream f(config_path);
      if (!f) {
        out << error_json("usage", "cannot open config file: " + config_path).dump(2) << "\n";
        return kUsage;
      }
      json j;
      try {
        f >> j;
      } catch (const json::exception& e) {
        return fail_validation({std::string("config is not valid JSON: ") + e.what()}, out);
      }
      if (!j.is_object() || !j.contains("configs") || !j["configs"].is_array())
        return fail_validation({"sweep config must be an object with a 'configs' array"}, out);
      std::vector<ModeSimConfig> configs;
      std::vector<std::string> problems;
      for (std::size_t i = 0; i < j["configs"].size(); ++i) {
        std::vector<std::string> p;
        bool fields_ok = false;
        configs.push_back(config_from_json(j["configs"][i], p, fields_ok));
        for (const auto& msg : p)
          problems.push_back("configs[" + std::to_string(i) + "]: " + msg);
      }
      if (!problems.empty()) return fail_validation(problems, out);
      emit(sweep_table(sweep(configs)).render(format), out_path, out);
      return kOk;
    }
  } catch (const ConfigError& e) {
    return fail_validation(e.violations(), out);
  } catch (const Error& e) {
    out << error_json(e.kind(), e.what()).dump(2) << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    out << error_json("InvalidArgument", e.what()).dump(2) << "\n";
    return kNumerical;
  }
  return kOk;
}

}  // namespace radbc::cli

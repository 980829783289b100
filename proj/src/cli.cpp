#include "gabor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "gabor/barrier.hpp"
#include "gabor/criterion.hpp"
#include "gabor/error.hpp"
#include "gabor/gaussian_certificate.hpp"
#include "gabor/io.hpp"
#include "gabor/lattice.hpp"
#include "gabor/metaplectic.hpp"
#include "gabor/oracle.hpp"

namespace gabor::cli {

namespace {

using nlohmann::json;

constexpr const char* kTailTolEnv = "GABOR_TAIL_TOL";

struct RunConfig {
  std::string window_spec;
  std::optional<double> dilation;
  std::vector<double> basis;
  std::string lattice_json;
  std::optional<double> delta;
  std::optional<double> a;
  std::optional<double> b;
  int grid_points = kDefaultGridPoints;
  std::optional<double> tail_tol;
  std::string output;
  std::string format = "json";
  double b_min = 0.1;
  double b_max = 10.0;
  int steps = 50;
  int model_size = kDefaultModelSize;
};

Window parse_window(const std::string& spec) {
  if (spec == "gaussian") return gaussian();
  if (spec.rfind("hermite:", 0) == 0) {
    const std::string order = spec.substr(8);
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(order, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != order.size() || n < 0) {
      throw Error(ErrorKind::Precondition, "hermite order must be a nonnegative integer");
    }
    return hermite(n);
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    return sampled(io::read_sampled_csv_file(path), "file:" + path);
  }
  throw Error(ErrorKind::Precondition,
              "window must be gaussian, hermite:<n> or file:<path>, got '" + spec + "'");
}

Window configured_window(const RunConfig& cfg) {
  Window w = parse_window(cfg.window_spec);
  return cfg.dilation ? dilate(w, *cfg.dilation) : w;
}

double tail_tolerance(const RunConfig& cfg) {
  if (cfg.tail_tol) return *cfg.tail_tol;
  if (const char* env = std::getenv(kTailTolEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw Error(ErrorKind::Precondition, std::string(kTailTolEnv) + " is not a number");
    }
    return v;
  }
  return kDefaultTailTol;
}

std::optional<Lattice2D> configured_lattice(const RunConfig& cfg) {
  if (!cfg.basis.empty() && !cfg.lattice_json.empty()) {
    throw Error(ErrorKind::Precondition, "give either --basis or --lattice-json, not both");
  }
  if (!cfg.basis.empty()) return Lattice2D::from_row_major(cfg.basis);
  if (!cfg.lattice_json.empty()) {
    std::ifstream in(cfg.lattice_json);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + cfg.lattice_json);
    return io::read_lattice_json(in);
  }
  return std::nullopt;
}

// Writes to --output if given, else to `out`.
template <typename Writer>
void emit(const RunConfig& cfg, std::ostream& out, Writer&& write) {
  if (cfg.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + cfg.output);
  write(file);
}

// JSON numbers must be finite; nan/inf become strings.
json number(double x) {
  if (std::isfinite(x)) return x == 0.0 ? json(0.0) : json(x);
  return io::format_double(x);
}

void emit_json(const RunConfig& cfg, std::ostream& out, const json& j) {
  emit(cfg, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

json verdict_json(const CriterionVerdict& v, const std::string& window, double tail_tol,
                  int grid_points) {
  return {{"schema", "gabor.certify/1"},
          {"window", window},
          {"status", to_string(v.status)},
          {"delta_tested", number(v.delta_tested)},
          {"min_delta_g", number(v.min_delta_g)},
          {"margin", number(v.margin)},
          {"argmin_omega", number(v.argmin_omega)},
          {"rigorous", v.rigorous},
          {"global_minimum", v.global_minimum},
          {"grid_points", grid_points},
          {"tail_tol", number(tail_tol)}};
}

json factors_json(const IwasawaFactors& f) {
  return {{"scale", number(f.scale)},
          {"r", number(f.r)},
          {"q", number(f.q)},
          {"a", number(f.a)},
          {"covolume", number(f.covolume())},
          {"swapped_columns", f.swapped_columns}};
}

int cmd_profile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Window w = configured_window(cfg);
  const auto profile = min_delta(w, cfg.grid_points, tail_tolerance(cfg));
  emit(cfg, out, [&](std::ostream& os) { io::write_profile_csv(os, profile); });
  err << fmt::format("min_value={} argmin_omega={} certifying={} rigorous={} global_minimum={}\n",
                     io::format_double(profile.min_value),
                     io::format_double(profile.argmin_omega), profile.certifying,
                     profile.rigorous, profile.global_minimum);
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Window w = configured_window(cfg);
  const double tol = tail_tolerance(cfg);
  const auto lattice = configured_lattice(cfg);
  const int modes = (cfg.delta ? 1 : 0) + ((cfg.a || cfg.b) ? 1 : 0) + (lattice ? 1 : 0);
  if (modes != 1) {
    throw Error(ErrorKind::Precondition,
                "certify needs exactly one of --delta, --a/--b, or a lattice");
  }
  json j;
  if (cfg.delta) {
    j = verdict_json(certify(w, *cfg.delta, cfg.grid_points, tol), w.label(), tol,
                     cfg.grid_points);
  } else if (lattice) {
    const auto reduced = reduce_general(w, *lattice);
    j = verdict_json(certify(reduced.window, reduced.covolume, cfg.grid_points, tol),
                     w.label(), tol, cfg.grid_points);
    j["reduction_steps"] = reduced.steps;
  } else {
    if (!cfg.a || !cfg.b) throw Error(ErrorKind::Precondition, "--a and --b go together");
    j = verdict_json(certify_rect(w, *cfg.a, *cfg.b, cfg.grid_points, tol), w.label(), tol,
                     cfg.grid_points);
  }
  emit_json(cfg, out, j);
  return kExitOk;
}

int cmd_barrier_scan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto rows = h1_barrier_scan(cfg.b_min, cfg.b_max, cfg.steps, tail_tolerance(cfg));
  emit(cfg, out, [&](std::ostream& os) { io::write_scan_csv(os, rows); });
  return kExitOk;
}

int cmd_gaussian_cert(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto c = gaussian_certificate();
  emit_json(cfg, out,
            {{"schema", "gabor.gaussian-cert/1"},
             {"tail0", number(c.tail0)},
             {"tail1", number(c.tail1)},
             {"numerator_lb", number(c.numerator_lb)},
             {"denominator_ub", number(c.denominator_ub)},
             {"ratio_lb", number(c.ratio_lb)},
             {"certified_delta", number(c.certified_delta)}});
  return kExitOk;
}

int cmd_iwasawa(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto lattice = configured_lattice(cfg);
  if (!lattice) throw Error(ErrorKind::Precondition, "iwasawa needs --basis or --lattice-json");
  json j = factors_json(iwasawa(*lattice));
  j["schema"] = "gabor.iwasawa/1";
  emit_json(cfg, out, j);
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto lattice = configured_lattice(cfg);
  if (!lattice) throw Error(ErrorKind::Precondition, "reduce needs --basis or --lattice-json");
  const Window w = configured_window(cfg);
  const auto reduced = reduce_general(w, *lattice);
  json j = {{"schema", "gabor.reduce/1"},
            {"window", w.label()},
            {"reduced_window", reduced.window.label()},
            {"delta_eff", number(reduced.covolume)},
            {"factors", factors_json(reduced.factors)},
            {"steps", reduced.steps},
            {"parity_before", to_string(reduced.parity_before)},
            {"parity_after", to_string(reduced.parity_after)}};
  if (cfg.format == "csv") {
    // Samples of the reduced window on the standard grid.
    emit(cfg, out, [&](std::ostream& os) { io::write_sampled_csv(os, sample(reduced.window)); });
  } else {
    emit_json(cfg, out, j);
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (!cfg.a || !cfg.b) throw Error(ErrorKind::Precondition, "oracle needs --a and --b");
  const Window w = configured_window(cfg);
  const auto model = make_model(w, *cfg.a, *cfg.b, cfg.model_size);
  const auto fb = finite_frame_bounds(model);
  emit_json(cfg, out,
            {{"schema", "gabor.oracle/1"},
             {"A", number(fb.A)},
             {"B", number(fb.B)},
             {"ratio", number(fb.ratio())},
             {"N", model.N},
             {"snapped_a", number(model.snapped_a)},
             {"snapped_b", number(model.snapped_b)},
             {"time_step", model.time_step},
             {"freq_step", model.freq_step}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wirtinger criterion for Gabor frames"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", cfg.window_spec, "gaussian | hermite:<n> | file:<path>")
        ->required();
    sub->add_option("--dilation", cfg.dilation, "dilate the window by b > 0 first");
  };
  auto add_scan = [&](CLI::App* sub) {
    sub->add_option("--grid-points", cfg.grid_points, "odd number of omega grid points");
    sub->add_option("--tail-tol", cfg.tail_tol,
                    "relative tail tolerance (default 1e-12, env GABOR_TAIL_TOL)");
  };
  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--basis", cfg.basis, "row-major basis b11,b12,b21,b22")
        ->delimiter(',')
        ->expected(4);
    sub->add_option("--lattice-json", cfg.lattice_json, "file with {\"basis\": [[..],[..]]}");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "write the artifact to this file");
  };

  auto* profile = app.add_subcommand("profile", "density profile delta_g(omega) as CSV");
  add_window(profile);
  add_scan(profile);
  add_output(profile);

  auto* certify_cmd = app.add_subcommand("certify", "Wirtinger verdict as JSON");
  add_window(certify_cmd);
  add_scan(certify_cmd);
  add_lattice(certify_cmd);
  add_output(certify_cmd);
  certify_cmd->add_option("--delta", cfg.delta, "co-volume of delta Z x Z");
  certify_cmd->add_option("--a", cfg.a, "time step of aZ x bZ");
  certify_cmd->add_option("--b", cfg.b, "frequency step of aZ x bZ");

  auto* scan = app.add_subcommand("barrier-scan", "delta_{phi_b}(0) over b as CSV");
  scan->add_option("--b-min", cfg.b_min);
  scan->add_option("--b-max", cfg.b_max);
  scan->add_option("--steps", cfg.steps);
  scan->add_option("--tail-tol", cfg.tail_tol);
  add_output(scan);

  auto* cert = app.add_subcommand("gaussian-cert", "closed-form Gaussian certificate as JSON");
  add_output(cert);

  auto* iwa = app.add_subcommand("iwasawa", "Iwasawa factors of a lattice as JSON");
  add_lattice(iwa);
  add_output(iwa);

  auto* reduce = app.add_subcommand("reduce", "reduce a general lattice to delta Z x Z");
  add_window(reduce);
  add_lattice(reduce);
  add_output(reduce);
  reduce->add_option("--format", cfg.format, "json (summary) or csv (reduced samples)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* oracle = app.add_subcommand("oracle", "finite-model frame bounds as JSON");
  add_window(oracle);
  add_output(oracle);
  oracle->add_option("--a", cfg.a)->required();
  oracle->add_option("--b", cfg.b)->required();
  oracle->add_option("--N", cfg.model_size, "model dimension");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (profile->parsed()) return cmd_profile(cfg, out, err);
    if (certify_cmd->parsed()) return cmd_certify(cfg, out, err);
    if (scan->parsed()) return cmd_barrier_scan(cfg, out, err);
    if (cert->parsed()) return cmd_gaussian_cert(cfg, out, err);
    if (iwa->parsed()) return cmd_iwasawa(cfg, out, err);
    if (reduce->parsed()) return cmd_reduce(cfg, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, out, err);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.numerical() ? kExitNumerical : kExitPrecondition;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace gabor::cli

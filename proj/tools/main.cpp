// Command-line front end: batch evaluation of formal powers, current
// densities, streamline plots, boundary potentials, conductivity fitting,
// and the self-verification suite. All artifacts are deterministic for a
// given configuration and seed.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohmflow/conductivity_fit.hpp"
#include "ohmflow/emit.hpp"
#include "ohmflow/errors.hpp"
#include "ohmflow/fields_potentials.hpp"
#include "ohmflow/formal_powers.hpp"
#include "ohmflow/run_config.hpp"
#include "ohmflow/sampling.hpp"
#include "ohmflow/separable.hpp"
#include "ohmflow/streamline.hpp"
#include "ohmflow/verify.hpp"

namespace {

using namespace ohmflow;

constexpr int k_exit_usage = 2;
constexpr int k_exit_numeric = 3;

// "1", "i", "-i", "2.5", or "re,im".
Cplx parse_coeff(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("coefficient must be 1, i, -i, a real number, or re,im: '" +
                                 text + "'");
  };
  if (text.empty()) throw bad();
  if (text == "i") return {0.0, 1.0};
  if (text == "-i") return {0.0, -1.0};
  const auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != part.size()) throw bad();
    return v;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return {to_double(text), 0.0};
  return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  return out;
}

std::string sibling_with_extension(const std::string& path, const std::string& ext) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + ext;
  }
  return path.substr(0, dot) + ext;
}

std::vector<Point> plane_grid(const RunConfig& cfg) {
  if (cfg.domain == "unit-disk") return disk_grid(cfg.grid_resolution);
  std::vector<Point> pts;
  const int n = cfg.grid_resolution;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      pts.push_back({-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * k / (n - 1)});
    }
  }
  return pts;
}

void require_exponential_model(const RunConfig& cfg, const std::string& verb) {
  if (cfg.use_fitted) {
    throw std::invalid_argument(verb +
                                " requires the exponential sigma model; the fitted model is "
                                "supported by the powers command (see --band)");
  }
}

int run_powers(const RunConfig& cfg, int m, Cplx coeff, std::size_t band,
               const std::string& out_path, const std::string& format) {
  const std::vector<Point> grid = plane_grid(cfg);
  std::vector<PowerRow> rows;
  rows.reserve(grid.size());

  if (cfg.use_fitted) {
    std::ifstream in(cfg.fit_path);
    if (!in) throw std::invalid_argument("cannot open fit file: " + cfg.fit_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const PiecewiseSeparableSigma fitted = fit_from_json(buf.str());
    if (band >= fitted.bands.size()) {
      throw std::invalid_argument("band index out of range: the fit has " +
                                  std::to_string(fitted.bands.size()) + " bands");
    }
    const GeneratingSequence seq{band_weight(fitted, band)};
    const QuadratureOptions quad{cfg.quadrature_tol, 20};
    for (const Point& at : grid) {
      rows.push_back({at.x1, at.x2, formal_power(seq, {0, m, coeff, {0.0, 0.0}}, at, quad)});
    }
  } else if (m <= 2) {
    for (const Point& at : grid) {
      rows.push_back({at.x1, at.x2, closed_form_power(m, coeff, cfg.sigma1, cfg.sigma2, at)});
    }
  } else {
    std::cerr << "note: order " << m << " has no closed form; using the numeric recursion\n";
    const GeneratingSequence seq = exponential_sequence(cfg.sigma1, cfg.sigma2);
    const QuadratureOptions quad{cfg.quadrature_tol, 20};
    for (const Point& at : grid) {
      rows.push_back({at.x1, at.x2, formal_power(seq, {0, m, coeff, {0.0, 0.0}}, at, quad)});
    }
  }

  std::ofstream out = open_output(out_path);
  if (format == "json") {
    write_powers_json(out, rows);
  } else {
    write_powers_csv(out, rows);
  }
  return 0;
}

int run_fields(const RunConfig& cfg, int m, Cplx coeff, const std::string& out_path,
               const std::string& format) {
  require_exponential_model(cfg, "fields");
  std::vector<FieldRow> rows;
  for (const Point& at : plane_grid(cfg)) {
    const CurrentVector j = current_density(m, coeff, cfg.sigma1, cfg.sigma2, cfg.sigma3,
                                            with_x3(at, 0.0), cfg.quadrature_tol);
    rows.push_back({at.x1, at.x2, j.j1, j.j2});
  }
  std::ofstream out = open_output(out_path);
  if (format == "json") {
    write_fields_json(out, rows);
  } else {
    write_fields_csv(out, rows);
  }
  return 0;
}

int run_boundary(const RunConfig& cfg, int m, Cplx coeff, const std::string& out_path,
                 const std::string& format) {
  require_exponential_model(cfg, "boundary");
  if (cfg.domain != "unit-disk") {
    throw std::invalid_argument("boundary traces are defined on the unit-disk domain");
  }
  const BoundaryTrace trace =
      boundary_trace(m, coeff, cfg.sigma1, cfg.sigma2, 4 * cfg.grid_resolution);
  std::ofstream out = open_output(out_path);
  if (format == "json") {
    write_boundary_json(out, trace);
  } else {
    write_boundary_csv(out, trace);
  }
  return 0;
}

int run_trace(const RunConfig& cfg, int m, Cplx coeff, const std::string& out_path) {
  require_exponential_model(cfg, "trace");
  if (cfg.domain != "unit-disk") {
    throw std::invalid_argument("streamline tracing is defined on the unit-disk domain");
  }
  const PlaneCurrent field =
      plane_current(m, coeff, cfg.sigma1, cfg.sigma2, cfg.quadrature_tol);
  const double sigma_origin = 1.0;  // exp(0) at the disk center
  const StepRule rule = cfg.step_rule == "two_tier"
                            ? StepRule::two_tier(cfg.sigma1, cfg.sigma2, sigma_origin)
                            : StepRule::sigma_scaled(cfg.sigma1, cfg.sigma2, sigma_origin);

  std::vector<Streamline> lines;
  for (int k = 0; k < cfg.ring_count; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / cfg.ring_count;
    const Point seed{cfg.ring_radius * std::cos(theta), cfg.ring_radius * std::sin(theta)};
    lines.push_back(trace_streamline(field, seed, rule, cfg.max_steps));
  }

  SvgOptions svg;
  svg.arrow_every = cfg.arrow_every;
  std::ofstream svg_out = open_output(out_path);
  write_trace_svg(svg_out, lines, svg);
  std::ofstream csv_out = open_output(sibling_with_extension(out_path, ".csv"));
  write_trace_csv(csv_out, lines);
  return 0;
}

int run_fit(const std::string& input, std::optional<double> K, const std::string& interp,
            const std::string& out_path) {
  const SampleGrid grid = read_sample_csv_file(input);
  FitOptions opts;
  opts.K = K;
  if (interp == "linear") {
    opts.kind = InterpKind::linear;
  } else if (interp == "pchip") {
    opts.kind = InterpKind::pchip;
  } else {
    throw std::invalid_argument("interp must be pchip or linear");
  }
  const PiecewiseSeparableSigma fitted = fit_conductivity(grid, opts);
  std::ofstream out = open_output(out_path);
  out << fit_to_json(fitted);
  return 0;
}

int run_verify(const RunConfig& cfg) {
  require_exponential_model(cfg, "verify");
  VerifyOptions opts;
  opts.sigma1 = cfg.sigma1;
  opts.sigma2 = cfg.sigma2;
  opts.sigma3 = cfg.sigma3;
  opts.quadrature_tol = cfg.quadrature_tol;
  opts.residual_tol = cfg.residual_tol;
  opts.seed = cfg.seed;
  opts.grid_resolution = cfg.grid_resolution;
  const std::vector<CheckResult> results = run_verification(opts);
  std::cout << format_verification_table(results);
  return all_passed(results) ? 0 : k_exit_numeric;
}

struct ModelFlags {
  double sigma1 = 3.0, sigma2 = 1.0, sigma3 = 0.0;
  int grid = 21;
  double tol = 1e-9;
  double residual_tol = 1e-6;
  std::uint64_t seed = 1234;
  std::string config_path;
};

void add_model_flags(CLI::App* sub, ModelFlags& f) {
  sub->add_option("--sigma1", f.sigma1, "conductivity exponent along x1");
  sub->add_option("--sigma2", f.sigma2, "conductivity exponent along x2");
  sub->add_option("--sigma3", f.sigma3, "conductivity exponent along x3");
  sub->add_option("--grid", f.grid, "grid resolution per axis");
  sub->add_option("--tol", f.tol, "quadrature tolerance");
  sub->add_option("--seed", f.seed, "seed for randomized sweeps");
  sub->add_option("--config", f.config_path, "JSON run configuration file");
}

// Config file first, then explicit flags on top.
RunConfig resolve_config(const CLI::App* sub, const ModelFlags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = load_config(f.config_path);
  if (sub->count("--sigma1")) cfg.sigma1 = f.sigma1;
  if (sub->count("--sigma2")) cfg.sigma2 = f.sigma2;
  if (sub->count("--sigma3")) cfg.sigma3 = f.sigma3;
  if (sub->count("--grid")) cfg.grid_resolution = f.grid;
  if (sub->count("--tol")) cfg.quadrature_tol = f.tol;
  if (sub->count("--seed")) cfg.seed = f.seed;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal powers and current distributions of a separable conductivity "
               "in the unit disk"};
  app.require_subcommand(1);

  ModelFlags flags;
  int order = 1;
  std::string coeff_text = "1";
  std::string format = "csv";
  std::string out_path;
  std::size_t band = 0;
  std::string fit_input;
  std::string interp = "pchip";
  double fit_K = 0.0;

  CLI::App* powers = app.add_subcommand("powers", "grid of a formal power Z^(m)(coeff,0;.)");
  add_model_flags(powers, flags);
  powers->add_option("-m,--order", order, "formal power order");
  powers->add_option("--coeff", coeff_text, "coefficient: 1, i, -i, re, or re,im");
  powers->add_option("--band", band, "band index when the sigma model is fitted");
  powers->add_option("--format", format, "csv or json");
  powers->add_option("--out", out_path, "output path (default powers.csv/.json)");

  CLI::App* fields = app.add_subcommand("fields", "grid of the current density (j1, j2)");
  add_model_flags(fields, flags);
  fields->add_option("-m,--order", order, "formal power order");
  fields->add_option("--coeff", coeff_text, "coefficient: 1, i, -i, re, or re,im");
  fields->add_option("--format", format, "csv or json");
  fields->add_option("--out", out_path, "output path (default fields.csv/.json)");

  CLI::App* trace = app.add_subcommand(
      "trace", "streamlines seeded on a ring: SVG plot plus a CSV of vertices");
  add_model_flags(trace, flags);
  trace->add_option("-m,--order", order, "formal power order");
  trace->add_option("--coeff", coeff_text, "coefficient: 1, i, -i, re, or re,im");
  trace->add_option("--out", out_path, "SVG output path; a .csv sibling is always written");

  CLI::App* boundary =
      app.add_subcommand("boundary", "potential on the unit circle (theta, u, u_h)");
  add_model_flags(boundary, flags);
  boundary->add_option("-m,--order", order, "formal power order");
  boundary->add_option("--coeff", coeff_text, "coefficient: 1, i, -i, re, or re,im");
  boundary->add_option("--format", format, "csv or json");
  boundary->add_option("--out", out_path, "output path (default boundary.csv/.json)");

  CLI::App* fit =
      app.add_subcommand("fit", "fit a piecewise separable conductivity from x1,x2,sigma CSV");
  fit->add_option("input", fit_input, "sample CSV path")->required();
  CLI::Option* k_opt = fit->add_option("--K", fit_K, "affine weight offset (default 1 - x2_min)");
  fit->add_option("--interp", interp, "row interpolation: pchip or linear");
  fit->add_option("--out", out_path, "output path (default fit.json)");

  CLI::App* verify =
      app.add_subcommand("verify", "run the full property suite and print a pass/fail table");
  add_model_flags(verify, flags);
  verify->add_option("--residual-tol", flags.residual_tol, "residual tolerance for PDE checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : k_exit_usage;
  }

  try {
    if (powers->parsed()) {
      if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be csv or json");
      }
      if (out_path.empty()) out_path = format == "json" ? "powers.json" : "powers.csv";
      return run_powers(resolve_config(powers, flags), order, parse_coeff(coeff_text), band,
                        out_path, format);
    }
    if (fields->parsed()) {
      if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be csv or json");
      }
      if (out_path.empty()) out_path = format == "json" ? "fields.json" : "fields.csv";
      return run_fields(resolve_config(fields, flags), order, parse_coeff(coeff_text),
                        out_path, format);
    }
    if (trace->parsed()) {
      if (out_path.empty()) out_path = "trace.svg";
      return run_trace(resolve_config(trace, flags), order, parse_coeff(coeff_text), out_path);
    }
    if (boundary->parsed()) {
      if (format != "csv" && format != "json") {
        throw std::invalid_argument("format must be csv or json");
      }
      if (out_path.empty()) out_path = format == "json" ? "boundary.json" : "boundary.csv";
      return run_boundary(resolve_config(boundary, flags), order, parse_coeff(coeff_text),
                          out_path, format);
    }
    if (fit->parsed()) {
      if (out_path.empty()) out_path = "fit.json";
      std::optional<double> K;
      if (k_opt->count()) K = fit_K;
      return run_fit(fit_input, K, interp, out_path);
    }
    if (verify->parsed()) {
      RunConfig cfg = resolve_config(verify, flags);
      if (verify->count("--residual-tol")) cfg.residual_tol = flags.residual_tol;
      return run_verify(cfg);
    }
  } catch (const SingularWeightError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const BandLookupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const ClosedFormUnavailableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_exit_usage;
  } catch (const QuadratureError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return k_exit_numeric;
  } catch (const EvaluationError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return k_exit_numeric;
  } catch (const DegeneratePairError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return k_exit_numeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return k_exit_numeric;
  }
  return k_exit_usage;
}

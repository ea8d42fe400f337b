#include "siegert/cli.hpp"

#include "siegert/analytic.hpp"
#include "siegert/shoot.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace siegert {

using nlohmann::json;

namespace {

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::pair<double, double> scan_window(const SolverConfig& c) {
  if (!c.scan.e_min || !c.scan.e_max)
    throw Error(ErrorKind::config, "scan.e_min and scan.e_max are required (or --emin/--emax)");
  return {*c.scan.e_min, *c.scan.e_max};
}

Report make_report(const std::string& command, const SolverConfig& c) {
  Report r;
  r.command = command;
  r.potential = apply_cutoff(c.potential, c.grid);
  r.units = c.units;
  return r;
}

} // namespace

Report run_analytic(const SolverConfig& config) {
  config.validate();
  Report report = make_report("analytic", config);
  const bool exact = config.analytic.mode == "exact";
  const auto& p = config.potential;

  if (const auto* sw = std::get_if<SquareWell>(&p.shape)) {
    if (exact)
      throw Error(ErrorKind::unsupported, "exact mode is only available for the delta shell");
    for (const auto& r : square_well_resonances(sw->v0, sw->half_width, config.units, config.analytic.n_max))
      report.resonances.push_back({r.n, r.e_real, r.gamma, to_string(Method::analytic_square_well), 0.0});
  } else if (const auto* ds = std::get_if<DeltaShell>(&p.shape)) {
    for (int n = 1; n <= config.analytic.n_max; ++n) {
      const auto approx = delta_shell_approx(ds->lambda, ds->radius, n, config.units);
      if (approx.weak_coupling)
        report.warnings.push_back("n = " + std::to_string(n) +
                                  ": closed form used outside the strong-coupling regime |k| << lambda");
      if (exact) {
        const auto root = delta_shell_exact_root(ds->lambda, ds->radius, n, config.units, config.tolerances.newton_tol);
        report.resonances.push_back(
            {n, root.energy.e_real, root.energy.gamma, to_string(Method::exact_delta_shell), root.residual});
      } else {
        report.resonances.push_back({n, approx.e_real, approx.gamma, to_string(Method::analytic_delta_shell), 0.0});
      }
    }
  } else {
    throw Error(ErrorKind::unsupported, "no closed form for the " + family_name(p) + " potential");
  }
  return report;
}

Report run_solve(const SolverConfig& config) {
  config.validate();
  Report report = make_report("solve", config);
  const auto& p = report.potential;
  const auto [e_min, e_max] = scan_window(config);
  const int n_scan = config.scan.n_scan > 0 ? config.scan.n_scan : default_scan_points(e_min, e_max);

  std::vector<ResonanceResult> found;
  bool symmetric = false;
  if (p.hard_wall_left) {
    const auto grid = full_grid(p, config.grid.n_steps);
    found = solve_one_sided_all(p, e_min, e_max, n_scan, config.tolerances.tol_e, grid, config.units);
  } else if (is_symmetric(p)) {
    symmetric = true;
    const auto grid = symmetric_grid(p, config.grid.n_steps);
    for (const auto& b : bracket_scan(p, e_min, e_max, n_scan, grid, config.units))
      found.push_back(solve_symmetric(p, b, config.tolerances.tol_e, grid, config.units));
  } else {
    throw Error(ErrorKind::unsupported, "shooting needs a symmetric potential or a hard wall on the left");
  }
  if (found.empty())
    throw Error(ErrorKind::not_found, "no resonance found in [" + sig(e_min, 6) + ", " + sig(e_max, 6) + "]");

  for (const auto& r : found)
    report.resonances.push_back({std::nullopt, r.energy.e_real, r.energy.gamma, to_string(r.method),
                                 r.diagnostics.residual});
  const auto narrowest = std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.energy.gamma < b.energy.gamma;
  });
  report.trace = symmetric ? mirror_symmetric_trace(narrowest->trace) : narrowest->trace;
  return report;
}

Report run_transmission(const SolverConfig& config) {
  config.validate();
  Report report = make_report("transmission", config);
  const auto& p = report.potential;
  if (p.hard_wall_left)
    throw Error(ErrorKind::unsupported, "transmission is undefined with a hard wall");
  const auto [e_min, e_max] = scan_window(config);
  const auto grid = full_grid(p, 2 * config.grid.n_steps);
  const auto& units = config.units;

  report.curve = transmission_scan(p, e_min, e_max, config.transmission.n_points, grid, units);
  const double spacing = (e_max - e_min) / (config.transmission.n_points - 1);
  for (const auto& coarse : find_transmission_peaks(*report.curve)) {
    const double lo = std::max(e_min, coarse.e_peak - spacing);
    const double hi = std::min(e_max, coarse.e_peak + spacing);
    const auto peak = refine_transmission_peak(p, lo, hi, 1e-12 * std::max(1.0, coarse.e_peak), grid, units);
    PeakRow row{peak.e_peak, peak.t2_peak, std::nullopt};
    if (peak.t2_peak > 0.5 && peak.e_peak > e_min && peak.e_peak < e_max) {
      try {
        const auto local = resolve_peak(p, peak, e_min, e_max, grid, units);
        row.gamma_bw = breit_wigner_width(local, peak.e_peak);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::range)
          throw;
        report.warnings.push_back("peak at " + sig(peak.e_peak, 6) + ": " + e.what());
      }
    }
    report.peaks.push_back(row);
  }
  return report;
}

std::string format_report_json(const Report& report, bool header) {
  json j;
  if (header)
    j["generated_at"] = timestamp();
  j["command"] = report.command;
  j["potential"] = potential_to_json(report.potential);
  j["units"] = {{"hbar", report.units.hbar}, {"mass", report.units.mass}};
  j["resonances"] = json::array();
  for (const auto& r : report.resonances) {
    json row{{"e_real", r.e_real}, {"gamma", r.gamma}, {"method", r.method}, {"residual", r.residual}};
    if (r.n)
      row["n"] = *r.n;
    j["resonances"].push_back(row);
  }
  if (report.curve) {
    j["peaks"] = json::array();
    for (const auto& pk : report.peaks)
      j["peaks"].push_back({{"e_peak", pk.e_peak},
                            {"t2_peak", pk.t2_peak},
                            {"gamma_bw", pk.gamma_bw ? json(*pk.gamma_bw) : json(nullptr)}});
  }
  if (!report.warnings.empty())
    j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

std::string format_report_csv(const Report& report, bool header) {
  std::ostringstream os;
  if (header)
    os << "# siegert " << report.command << " generated " << timestamp() << "\n";
  if (report.curve) {
    os << format_curve_csv(*report.curve);
    os << "# peaks\n# e_peak,t2_peak,gamma_bw\n";
    for (const auto& pk : report.peaks)
      os << "# " << sig(pk.e_peak, 6) << "," << sig(pk.t2_peak, 6) << ","
         << (pk.gamma_bw ? sig(*pk.gamma_bw, 6) : std::string("nan")) << "\n";
    return os.str();
  }
  os << "n,e_real,gamma,gamma_half,method,residual\n";
  for (const auto& r : report.resonances)
    os << (r.n ? std::to_string(*r.n) : std::string()) << "," << sig(r.e_real, 6) << "," << sig(r.gamma, 6) << ","
       << sig(0.5 * r.gamma, 6) << "," << r.method << "," << sig(r.residual, 6) << "\n";
  return os.str();
}

std::string format_trace_csv(const WavefunctionTrace& trace) {
  std::ostringstream os;
  os << "x,re_psi,im_psi,abs2_psi\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    os << sig(trace.xs[i], 12) << "," << sig(trace.psi[i].real(), 12) << "," << sig(trace.psi[i].imag(), 12) << ","
       << sig(std::norm(trace.psi[i]), 12) << "\n";
  return os.str();
}

std::string format_curve_csv(const TransmissionCurve& curve) {
  std::ostringstream os;
  os << "energy,t2,r2\n";
  for (const auto& s : curve.samples)
    os << sig(s.e, 12) << "," << sig(s.t2, 12) << "," << sig(s.r2, 12) << "\n";
  return os.str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::not_found:
    return 2;
  case ErrorKind::overflow:
  case ErrorKind::bracket:
  case ErrorKind::degenerate:
  case ErrorKind::convergence:
  case ErrorKind::spurious_root:
    return 3;
  default:
    return 1;
  }
}

namespace {

struct CliOptions {
  std::string config_path;
  std::string potential;
  std::optional<double> e_min, e_max, tol, cutoff, hbar, mass;
  std::optional<int> nx, n_scan, n_max, n_points;
  std::string out, trace, format, mode;
  bool dump_config = false;
  bool no_header = false;
};

void add_options(CLI::App& cmd, CliOptions& o) {
  cmd.add_option("--config", o.config_path, "JSON config document");
  cmd.add_option("--potential", o.potential, "square-well:v0,L | delta-shell:lambda,L | double-barrier:v0,lambda");
  cmd.add_option("--emin", o.e_min, "lower end of the energy window");
  cmd.add_option("--emax", o.e_max, "upper end of the energy window");
  cmd.add_option("--nscan", o.n_scan, "energy lattice points for resonance scans");
  cmd.add_option("--nx", o.nx, "RK4 steps over the half-domain");
  cmd.add_option("--tol", o.tol, "energy tolerance");
  cmd.add_option("--cutoff", o.cutoff, "cutoff a of the potential");
  cmd.add_option("--hbar", o.hbar, "action quantum");
  cmd.add_option("--mass", o.mass, "particle mass");
  cmd.add_option("--nmax", o.n_max, "largest quantum number for closed forms");
  cmd.add_option("--mode", o.mode, "approx | exact (analytic)");
  cmd.add_option("--npoints", o.n_points, "transmission curve samples");
  cmd.add_option("--out", o.out, "report path (default stdout)");
  cmd.add_option("--trace", o.trace, "wavefunction CSV path (solve)");
  cmd.add_option("--format", o.format, "csv | json");
  cmd.add_flag("--dump-config", o.dump_config, "print the resolved config and exit");
  cmd.add_flag("--no-header", o.no_header, "omit the timestamp header");
}

SolverConfig resolve_config(const CliOptions& o) {
  SolverConfig c;
  if (!o.config_path.empty()) {
    c = load_config(o.config_path);
  } else if (o.potential.empty()) {
    throw Error(ErrorKind::config, "either --config or --potential is required");
  }
  if (!o.potential.empty())
    c.potential = parse_potential_shorthand(o.potential);
  if (o.e_min) c.scan.e_min = *o.e_min;
  if (o.e_max) c.scan.e_max = *o.e_max;
  if (o.n_scan) c.scan.n_scan = *o.n_scan;
  if (o.nx) c.grid.n_steps = *o.nx;
  if (o.cutoff) c.grid.cutoff = *o.cutoff;
  if (o.tol) c.tolerances.tol_e = *o.tol;
  if (o.hbar) c.units.hbar = *o.hbar;
  if (o.mass) c.units.mass = *o.mass;
  if (o.n_max) c.analytic.n_max = *o.n_max;
  if (!o.mode.empty()) c.analytic.mode = o.mode;
  if (o.n_points) c.transmission.n_points = *o.n_points;
  if (!o.out.empty()) c.output.path = o.out;
  if (!o.trace.empty()) c.output.trace_path = o.trace;
  if (!o.format.empty()) c.output.format = o.format;
  if (o.no_header) c.output.header = false;
  c.validate();
  return c;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw Error(ErrorKind::config, "cannot write '" + path + "'");
  f << text;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Siegert resonance positions and widths of 1D finite-range potentials"};
  app.require_subcommand(1);
  CliOptions opts;
  auto* analytic = app.add_subcommand("analytic", "closed-form square-well / delta-shell resonances");
  auto* solve = app.add_subcommand("solve", "shooting solve for resonances in an energy window");
  auto* transmission = app.add_subcommand("transmission", "transmission curve, peaks and Breit-Wigner widths");
  for (auto* cmd : {analytic, solve, transmission})
    add_options(*cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto config = resolve_config(opts);
    if (opts.dump_config) {
      out << config_to_json(config).dump(2) << "\n";
      return 0;
    }
    Report report;
    if (analytic->parsed())
      report = run_analytic(config);
    else if (solve->parsed())
      report = run_solve(config);
    else
      report = run_transmission(config);

    for (const auto& w : report.warnings)
      err << "warning: " << w << "\n";
    const bool header = config.output.header;
    write_text(config.output.path,
               config.output.format == "json" ? format_report_json(report, header)
                                              : format_report_csv(report, header),
               out);
    if (!config.output.trace_path.empty() && report.trace)
      write_text(config.output.trace_path, format_trace_csv(*report.trace), out);
    return 0;
  } catch (const Error& e) {
    err << "siegert: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

} // namespace siegert

#ifndef SIEGERT_CLI_HPP
#define SIEGERT_CLI_HPP

#include "siegert/config.hpp"
#include "siegert/transmission.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace siegert {

struct ResonanceRow {
  std::optional<int> n;
  double e_real = 0.0;
  double gamma = 0.0;
  std::string method;
  double residual = 0.0;
};

struct PeakRow {
  double e_peak = 0.0;
  double t2_peak = 0.0;
  std::optional<double> gamma_bw;
};

struct Report {
  std::string command;
  PotentialSpec potential; // with the cutoff override applied
  Units units;
  std::vector<ResonanceRow> resonances;
  std::vector<PeakRow> peaks;
  std::optional<TransmissionCurve> curve;
  std::optional<WavefunctionTrace> trace;
  std::vector<std::string> warnings;
};

/// Closed-form rows for the square well or delta shell in config.analytic.mode.
Report run_analytic(const SolverConfig& config);

/// Shooting solve over the scan window: symmetric potentials by bisection on
/// the symmetry criterion, hard-wall traps by residual minimisation. The
/// trace of the narrowest resonance is attached (mirrored for symmetric
/// solves). Throws Error(not_found) when the window holds no resonance.
Report run_solve(const SolverConfig& config);

/// |T|^2 curve over the scan window with refined peaks and their half-maximum
/// widths where the half-maximum level is crossed inside the window.
Report run_transmission(const SolverConfig& config);

std::string format_report_json(const Report& report, bool header);
std::string format_report_csv(const Report& report, bool header);
std::string format_trace_csv(const WavefunctionTrace& trace);
std::string format_curve_csv(const TransmissionCurve& curve);

/// Process exit status for an error category: 1 configuration, 2 nothing
/// found, 3 numerical failure.
int exit_code_for(ErrorKind kind);

/// Entry point of the command-line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace siegert

#endif // SIEGERT_CLI_HPP

#ifndef SIEGERT_CONFIG_HPP
#define SIEGERT_CONFIG_HPP

#include "siegert/core.hpp"
#include "siegert/potentials.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace siegert {

struct GridConfig {
  std::optional<double> cutoff; // overrides a_minus/a_plus of open potentials
  int n_steps = 10000;          // RK4 steps over the half-domain
  bool operator==(const GridConfig&) const = default;
};

struct ScanConfig {
  std::optional<double> e_min;
  std::optional<double> e_max;
  int n_scan = 0; // 0 selects 200 points per unit energy
  bool operator==(const ScanConfig&) const = default;
};

struct ToleranceConfig {
  double tol_e = 1e-5;
  double newton_tol = 1e-12;
  bool operator==(const ToleranceConfig&) const = default;
};

struct AnalyticConfig {
  int n_max = 10;
  std::string mode = "approx"; // approx | exact
  bool operator==(const AnalyticConfig&) const = default;
};

struct TransmissionConfig {
  int n_points = 400;
  bool operator==(const TransmissionConfig&) const = default;
};

struct OutputConfig {
  std::string format = "json"; // json | csv
  std::string path;             // empty: stdout
  std::string trace_path;       // wavefunction CSV for `solve`
  bool header = true;           // timestamp line / key
  bool operator==(const OutputConfig&) const = default;
};

/// Everything one CLI invocation needs, loadable from a JSON document.
struct SolverConfig {
  PotentialSpec potential;
  Units units;
  GridConfig grid;
  ScanConfig scan;
  ToleranceConfig tolerances;
  AnalyticConfig analytic;
  TransmissionConfig transmission;
  OutputConfig output;

  bool operator==(const SolverConfig&) const = default;

  /// Throws Error(config) on non-positive tolerances, n_steps < 100,
  /// an unordered scan range or an unknown format/mode.
  void validate() const;
};

/// Potential from its JSON description. Geometry keys (a_minus, a_plus,
/// b_minus, b_plus, hard_wall_left, delta_terms) override the family defaults.
PotentialSpec potential_from_json(const nlohmann::json& j);
nlohmann::json potential_to_json(const PotentialSpec& p);

/// `square-well:v0,L`, `delta-shell:lambda,L` or `double-barrier:v0,lambda`.
PotentialSpec parse_potential_shorthand(const std::string& text);

SolverConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const SolverConfig& c);

SolverConfig load_config(const std::string& path);

/// Copy of the potential with the cutoff override applied.
PotentialSpec apply_cutoff(PotentialSpec p, const GridConfig& grid);

} // namespace siegert

#endif // SIEGERT_CONFIG_HPP

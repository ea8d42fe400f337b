#ifndef SIEGERT_SHOOT_HPP
#define SIEGERT_SHOOT_HPP

#include "siegert/core.hpp"
#include "siegert/potentials.hpp"

#include <string>
#include <vector>

namespace siegert {

enum class Method { symmetric_shooting, one_sided, analytic_square_well, analytic_delta_shell, exact_delta_shell };

std::string to_string(Method m);

/// Real-energy interval with one sign change of the symmetry criterion.
struct Bracket {
  double e_low = 0.0;
  double e_high = 0.0;
};

using BracketList = std::vector<Bracket>;

struct Diagnostics {
  double residual = 0.0; // criterion or outgoing residual at e_real
  Bracket bracket;       // interval the solver was confined to
  Grid grid;
};

struct ResonanceResult {
  ComplexEnergy energy;
  WavefunctionTrace trace;
  Method method = Method::symmetric_shooting;
  Diagnostics diagnostics;
};

inline constexpr double default_tol_e = 1e-5;
inline constexpr double default_start_amplitude = 1e-3;
inline constexpr int default_n_steps = 10000;
inline constexpr double default_scan_density = 200.0; // points per unit energy

/// Grid over the left half-domain [a_minus, 0].
Grid symmetric_grid(const PotentialSpec& p, int n_steps = default_n_steps);

/// Grid over [a_minus, a_plus] (starting at the wall when there is one).
Grid full_grid(const PotentialSpec& p, int n_steps = default_n_steps);

/// Scan points for [e_min, e_max] at the default density (at least 2).
int default_scan_points(double e_min, double e_max);

/// Start at a_minus with psi = amplitude, psi' = i k psi, integrate to 0 and
/// return d|psi|^2/dx there, i.e. 2 Re(conj(psi) psi').
double symmetry_criterion(const PotentialSpec& p, double e, const Grid& grid, const Units& units,
                          double amplitude = default_start_amplitude);

/// Adjacent lattice pairs where the criterion changes sign.
BracketList bracket_scan(const PotentialSpec& p, double e_min, double e_max, int n_scan, const Grid& grid,
                         const Units& units);

/// Bisection on the symmetry criterion until the bracket is narrower than
/// tol_e, then the Siegert width from the converged half-trace.
ResonanceResult solve_symmetric(const PotentialSpec& p, Bracket bracket, double tol_e, const Grid& grid,
                                const Units& units, double amplitude = default_start_amplitude);

/// Extends a left half-trace to the full domain with psi(x) = c conj(psi(-x)),
/// the phase c chosen so psi is continuous at 0. |psi|^2 is then even.
WavefunctionTrace mirror_symmetric_trace(const WavefunctionTrace& half);

/// Trace from the hard wall (psi = 0, psi' = 1) to a_plus.
WavefunctionTrace one_sided_trace(const PotentialSpec& p, double e, const Grid& grid, const Units& units);

/// |psi'(a+)|^2 / (|psi'(a+)|^2 + k^2 |psi(a+)|^2) for the wall-started trace.
/// Zero where the real part of the outgoing condition psi' = i k psi holds.
double outgoing_residual(const PotentialSpec& p, double e, const Grid& grid, const Units& units);

/// Every local minimum of the outgoing residual on the scan lattice, refined
/// by golden-section search to tol_e, ordered by energy. Throws
/// Error(not_found) when there is none.
std::vector<ResonanceResult> solve_one_sided_all(const PotentialSpec& p, double e_min, double e_max, int n_scan,
                                                 double tol_e, const Grid& grid, const Units& units);

/// The refined minimum with the smallest residual.
ResonanceResult solve_one_sided(const PotentialSpec& p, double e_min, double e_max, int n_scan, double tol_e,
                                const Grid& grid, const Units& units);

} // namespace siegert

#endif // SIEGERT_SHOOT_HPP

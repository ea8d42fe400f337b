#include "siegert/integrate.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace siegert {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double delta_snap_tolerance(const Grid& grid) {
  return 1e-9 * std::max(1.0, std::max(std::abs(grid.x_start), std::abs(grid.x_end)));
}

// Jump strength per grid node; zero where there is no delta term.
std::vector<double> node_jumps(const PotentialSpec& p, const Grid& grid) {
  std::vector<double> jumps(static_cast<std::size_t>(grid.n_steps) + 1, 0.0);
  const double tol = delta_snap_tolerance(grid);
  for (const auto& d : p.delta_terms) {
    if (d.position < grid.x_start - tol || d.position > grid.x_end + tol)
      continue;
    const long j = std::lround((d.position - grid.x_start) / grid.dx());
    if (std::abs(grid.node(static_cast<int>(j)) - d.position) > tol)
      throw Error(ErrorKind::config,
                  "delta term at x = " + std::to_string(d.position) + " is not on a grid node");
    jumps[static_cast<std::size_t>(j)] += 2.0 * d.strength;
  }
  return jumps;
}

} // namespace

StateVector rhs(const StateVector& state, double x, cplx e, const PotentialSpec& p, const Units& units) {
  const double coef = 2.0 * units.mass / (units.hbar * units.hbar);
  return {state.dpsi, coef * (evaluate(p, x) - e) * state.psi};
}

WavefunctionTrace propagate(const PotentialSpec& p, cplx e, const Grid& grid, StateVector init,
                            const Units& units, Direction direction) {
  if (in_wall_region(p, grid.x_start))
    throw Error(ErrorKind::wall, "grid extends behind the hard wall");
  if (init.psi == cplx{} && init.dpsi == cplx{})
    throw Error(ErrorKind::domain, "initial state must be nontrivial");

  const int n = grid.n_steps;
  const double dx = grid.dx();
  const double coef = 2.0 * units.mass / (units.hbar * units.hbar);
  const auto jumps = node_jumps(p, grid);

  // V at nodes (even slots) and midpoints (odd slots).
  std::vector<cplx> shifted(2 * static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const double x = grid.node(j);
    shifted[2 * static_cast<std::size_t>(j)] = coef * (evaluate(p, x) - e);
    if (j < n)
      shifted[2 * static_cast<std::size_t>(j) + 1] = coef * (evaluate(p, x + 0.5 * dx) - e);
  }

  WavefunctionTrace trace;
  trace.xs.resize(static_cast<std::size_t>(n) + 1);
  trace.psi.resize(trace.xs.size());
  trace.dpsi.resize(trace.xs.size());

  const bool fwd = direction == Direction::forward;
  const double h = fwd ? dx : -dx;
  const double jump_sign = fwd ? 1.0 : -1.0;

  cplx psi = init.psi;
  cplx dpsi = init.dpsi;
  int j = fwd ? 0 : n;
  auto store = [&](int idx) {
    const auto u = static_cast<std::size_t>(idx);
    if (jumps[u] != 0.0)
      dpsi += jump_sign * jumps[u] * psi;
    if (!finite(psi) || !finite(dpsi))
      throw Error(ErrorKind::overflow, "non-finite wavefunction at x = " + std::to_string(grid.node(idx)) +
                                           "; energy is likely far from the physical regime");
    trace.xs[u] = grid.node(idx);
    trace.psi[u] = psi;
    trace.dpsi[u] = dpsi;
  };
  store(j);

  for (int step = 0; step < n; ++step) {
    const auto s0 = 2 * static_cast<std::size_t>(j);
    const auto sm = fwd ? s0 + 1 : s0 - 1;
    const auto s1 = fwd ? s0 + 2 : s0 - 2;

    const cplx k1p = dpsi;
    const cplx k1d = shifted[s0] * psi;
    const cplx a_psi = psi + 0.5 * h * k1p;
    const cplx a_dpsi = dpsi + 0.5 * h * k1d;
    const cplx k2p = a_dpsi;
    const cplx k2d = shifted[sm] * a_psi;
    const cplx b_psi = psi + 0.5 * h * k2p;
    const cplx b_dpsi = dpsi + 0.5 * h * k2d;
    const cplx k3p = b_dpsi;
    const cplx k3d = shifted[sm] * b_psi;
    const cplx c_psi = psi + h * k3p;
    const cplx c_dpsi = dpsi + h * k3d;
    const cplx k4p = c_dpsi;
    const cplx k4d = shifted[s1] * c_psi;

    psi += h * (k1p + 2.0 * (k2p + k3p) + k4p) / 6.0;
    dpsi += h * (k1d + 2.0 * (k2d + k3d) + k4d) / 6.0;
    j += fwd ? 1 : -1;
    store(j);
  }
  return trace;
}

Grid grid_with_deltas(const PotentialSpec& p, double x_start, double x_end, int min_steps) {
  Grid probe(x_start, x_end, std::max(min_steps, 1));
  const double span = x_end - x_start;
  const double tol = delta_snap_tolerance(probe);
  std::vector<double> fractions;
  for (const auto& d : p.delta_terms)
    if (d.position >= x_start - tol && d.position <= x_end + tol)
      fractions.push_back((d.position - x_start) / span);
  if (fractions.empty())
    return probe;

  const long limit = 1000L * probe.n_steps;
  for (long n = probe.n_steps; n <= limit; ++n) {
    bool ok = true;
    for (double f : fractions) {
      const double pos = f * static_cast<double>(n);
      if (std::abs(pos - std::round(pos)) * span / static_cast<double>(n) > tol) {
        ok = false;
        break;
      }
    }
    if (ok)
      return Grid(x_start, x_end, static_cast<int>(n));
  }
  throw Error(ErrorKind::config, "no grid resolution places every delta term on a node");
}

} // namespace siegert

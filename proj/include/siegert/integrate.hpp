#ifndef SIEGERT_INTEGRATE_HPP
#define SIEGERT_INTEGRATE_HPP

#include "siegert/core.hpp"
#include "siegert/potentials.hpp"

namespace siegert {

/// (psi, psi') at one position.
struct StateVector {
  cplx psi;
  cplx dpsi;
};

enum class Direction { forward, backward };

/// Right-hand side of psi'' = (2m/hbar^2)(V(x) - E) psi as a first-order system.
StateVector rhs(const StateVector& state, double x, cplx e, const PotentialSpec& p, const Units& units);

/// Classical fixed-step RK4 over the grid. Forward starts from `init` at
/// x_start, backward starts at x_end and walks down. The returned trace is
/// always ordered by increasing x and includes both endpoints.
///
/// Delta terms must sit on grid nodes. Crossing one applies psi' += 2 lambda psi
/// (or the inverse when walking backward); `init` is taken as the one-sided
/// value outside the interval, and every stored node carries the one-sided
/// derivative on the far side in the direction of travel.
WavefunctionTrace propagate(const PotentialSpec& p, cplx e, const Grid& grid, StateVector init,
                            const Units& units, Direction direction = Direction::forward);

/// Grid over [x_start, x_end] with at least min_steps steps whose nodes hit
/// every delta term in the interval. Throws Error(config) if no step count up
/// to 1000 * min_steps works.
Grid grid_with_deltas(const PotentialSpec& p, double x_start, double x_end, int min_steps);

} // namespace siegert

#endif // SIEGERT_INTEGRATE_HPP

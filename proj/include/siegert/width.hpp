#ifndef SIEGERT_WIDTH_HPP
#define SIEGERT_WIDTH_HPP

#include "siegert/core.hpp"
#include "siegert/potentials.hpp"

namespace siegert {

struct CurrentSample {
  double x;
  double j;
};

/// j = (hbar/m) Im(conj(psi) psi').
double probability_current(cplx psi, cplx dpsi, const Units& units);

/// Current at every node of a trace.
std::vector<CurrentSample> current_profile(const WavefunctionTrace& trace, const Units& units);

/// Trapezoidal integral of |psi|^2 between the nodes nearest x_lo and x_hi.
double norm_between(const WavefunctionTrace& trace, double x_lo, double x_hi);

/// Decay rate from a left half-trace on [a_minus, 0]: outflow at the cutoff
/// over the norm of the half-well [b_minus, 0].
double siegert_width_symmetric(const WavefunctionTrace& trace, double e, const PotentialSpec& p,
                               const Units& units);

/// Decay rate from a trace spanning [a_minus, a_plus]: outflow at both
/// cutoffs over the norm between the confinement points. A hard wall on the
/// left contributes no outflow. Both channels share k = sqrt(2 m e)/hbar.
double siegert_width_asymmetric(const WavefunctionTrace& trace, double e, const PotentialSpec& p,
                                const Units& units);

} // namespace siegert

#endif // SIEGERT_WIDTH_HPP

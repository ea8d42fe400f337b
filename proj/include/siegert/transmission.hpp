#ifndef SIEGERT_TRANSMISSION_HPP
#define SIEGERT_TRANSMISSION_HPP

#include "siegert/core.hpp"
#include "siegert/potentials.hpp"

#include <vector>

namespace siegert {

/// Stationary scattering state at real energy e: A e^{ikx} + B e^{-ikx} left
/// of a_minus, C e^{ikx} right of a_plus.
struct ScatteringSolution {
  double e = 0.0;
  cplx amp_in;
  cplx amp_refl;
  cplx amp_trans;
  double t2 = 0.0; // |C/A|^2
  double r2 = 0.0; // |B/A|^2
  WavefunctionTrace trace;
};

struct TransmissionSample {
  double e;
  double t2;
  double r2;
};

/// Samples ordered by strictly increasing energy.
struct TransmissionCurve {
  std::vector<TransmissionSample> samples;
};

struct TransmissionPeak {
  double e_peak;
  double t2_peak;
};

/// Fixes C = 1 at a_plus and integrates back to a_minus, then splits the
/// left-side solution into incoming and reflected waves.
ScatteringSolution scattering_solution(const PotentialSpec& p, double e, const Grid& grid, const Units& units,
                                       bool keep_trace = true);

TransmissionCurve transmission_scan(const PotentialSpec& p, double e_min, double e_max, int n_points,
                                    const Grid& grid, const Units& units);

/// Interior samples above both neighbours, refined by the vertex of the
/// parabola through the three points.
std::vector<TransmissionPeak> find_transmission_peaks(const TransmissionCurve& curve);

/// Full width at half maximum around the sample nearest e_peak, from linearly
/// interpolated half-maximum crossings. Throws Error(range) when the peak is
/// below 1/2 or a crossing lies outside the curve.
double breit_wigner_width(const TransmissionCurve& curve, double e_peak);

/// Golden-section maximisation of |T|^2 on [e_low, e_high].
TransmissionPeak refine_transmission_peak(const PotentialSpec& p, double e_low, double e_high, double tol_e,
                                          const Grid& grid, const Units& units);

/// Curve around a refined peak wide enough to contain both half-maximum
/// crossings when they exist inside [e_floor, e_ceiling]. The window grows
/// outward by doubling; n_points samples are spread over the final window.
TransmissionCurve resolve_peak(const PotentialSpec& p, const TransmissionPeak& peak, double e_floor, double e_ceiling,
                               const Grid& grid, const Units& units, int n_points = 801);

} // namespace siegert

#endif // SIEGERT_TRANSMISSION_HPP

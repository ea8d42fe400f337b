#include "siegert/width.hpp"

#include <cmath>
#include <string>

namespace siegert {

double probability_current(cplx psi, cplx dpsi, const Units& units) {
  return units.hbar / units.mass * (std::conj(psi) * dpsi).imag();
}

std::vector<CurrentSample> current_profile(const WavefunctionTrace& trace, const Units& units) {
  std::vector<CurrentSample> out;
  out.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i)
    out.push_back({trace.xs[i], probability_current(trace.psi[i], trace.dpsi[i], units)});
  return out;
}

double norm_between(const WavefunctionTrace& trace, double x_lo, double x_hi) {
  if (trace.empty() || !(x_lo <= x_hi) || x_hi < trace.xs.front() || x_lo > trace.xs.back())
    throw Error(ErrorKind::domain, "integration interval does not intersect the trace");
  const auto lo = trace.nearest_index(x_lo);
  const auto hi = trace.nearest_index(x_hi);
  double sum = 0.0;
  for (auto i = lo; i < hi; ++i)
    sum += 0.5 * (std::norm(trace.psi[i]) + std::norm(trace.psi[i + 1])) * (trace.xs[i + 1] - trace.xs[i]);
  return sum;
}

namespace {

double checked_norm(const WavefunctionTrace& trace, double lo, double hi) {
  const double n = norm_between(trace, lo, hi);
  if (!(n > 0.0) || !std::isfinite(n))
    throw Error(ErrorKind::degenerate, "confined norm vanishes");
  return n;
}

} // namespace

double siegert_width_symmetric(const WavefunctionTrace& trace, double e, const PotentialSpec& p,
                               const Units& units) {
  const double k = wavenumber(e, units);
  const double outflow = std::norm(trace.psi[trace.nearest_index(p.a_minus)]);
  const double norm = checked_norm(trace, p.b_minus, 0.0);
  return units.hbar * units.hbar * k * outflow / (units.mass * norm);
}

double siegert_width_asymmetric(const WavefunctionTrace& trace, double e, const PotentialSpec& p,
                                const Units& units) {
  const double k = wavenumber(e, units);
  const double right = std::norm(trace.psi[trace.nearest_index(p.a_plus)]);
  const double left = p.hard_wall_left ? 0.0 : std::norm(trace.psi[trace.nearest_index(p.a_minus)]);
  const double norm = checked_norm(trace, p.b_minus, p.b_plus);
  return units.hbar * units.hbar * k * (right + left) / (units.mass * norm);
}

} // namespace siegert
